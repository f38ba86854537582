from fields.serializers import FieldSpecSerializer

from .linear import closed_form_params, make_code
from .serializers import CodeParamsSerializer, GeneratorMatrixSerializer
from .sweeps import code_params



def code_from_config(config):
    return make_code(config.field, config.m, config.set_kind, force=config.force)


def params_payload(config):
    """
    Brute-force (n, k, d) next to the closed-form prediction.
    """
    code = code_from_config(config)
    params = code_params(code, jobs=config.jobs, force=config.force)
    predicted = closed_form_params(code.q, code.m, code.kind)
    return {
        'field': FieldSpecSerializer(config.field).data,
        'q': code.q,
        'm': code.m,
        'kind': code.kind.value,
        **CodeParamsSerializer(params).data,
        'predicted': CodeParamsSerializer(predicted).data,
    }


def genmat_payload(config):
    code = code_from_config(config)
    return {
        **GeneratorMatrixSerializer(code).data,
        'field': FieldSpecSerializer(config.field).data,
    }
