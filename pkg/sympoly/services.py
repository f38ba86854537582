from fields.serializers import FieldSpecSerializer

from .polynomials import SymPoly, classify
from .serializers import ClassificationSerializer, PointTupleSerializer, SymPolySerializer
from .zeroes import count_distinguished_zeroes, enumerate_distinguished_zeroes, zero_count_bound



def zeroes_payload(config):
    """
    Count (and optionally list) the distinguished zeroes of the configured polynomial.
    """
    spec, m = config.field, config.m
    f = SymPoly.from_indices(spec, config.coeffs)
    subset = config.subset if config.subset is not None else tuple(range(spec.order))

    payload = {
        'field': FieldSpecSerializer(spec).data,
        **SymPolySerializer(f).data,
        'subset': list(subset),
        'count': count_distinguished_zeroes(f, subset, jobs=config.jobs, force=config.force),
        'bound4': zero_count_bound(len(subset), m, type_one=True),
        'bound5': zero_count_bound(len(subset), m, type_one=False),
        'classification': ClassificationSerializer(classify(f)).data,
    }
    if config.list_zeroes:
        zeroes = enumerate_distinguished_zeroes(f, subset, jobs=config.jobs, force=config.force)
        payload['zeroes'] = PointTupleSerializer(zeroes, many=True).data
    return payload
