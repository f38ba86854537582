from codes.services import code_from_config
from fields.serializers import FieldSpecSerializer

from .hierarchy import generalized_hamming_weights
from .serializers import GhwVectorSerializer, HistogramField, WeightSpectrumSerializer
from .spectra import all_higher_spectra, extension_spectrum, higher_weight_spectra, weight_distribution



def _code_header(config, code):
    return {
        'field': FieldSpecSerializer(config.field).data,
        'q': code.q,
        'm': code.m,
        'kind': code.kind.value,
    }


def weight_distribution_payload(config):
    code = code_from_config(config)
    spectrum = weight_distribution(code, jobs=config.jobs, force=config.force)
    return {
        **_code_header(config, code),
        'n': code.n,
        'k': code.k,
        **WeightSpectrumSerializer(spectrum).data,
    }


def ghw_payload(config):
    code = code_from_config(config)
    vector = generalized_hamming_weights(code, jobs=config.jobs, force=config.force)
    data = GhwVectorSerializer(vector).data
    payload = {**_code_header(config, code), 'ghw': data['ghw']}
    if config.witnesses:
        payload['witnesses'] = data['witnesses']
    return payload


def spectra_payload(config):
    """
    A^(r) for the requested r, or for every r = 0..k.
    """
    code = code_from_config(config)
    if config.r is None:
        spectra = all_higher_spectra(code, jobs=config.jobs, force=config.force)
    else:
        spectra = [higher_weight_spectra(code, config.r, jobs=config.jobs, force=config.force)]
    histogram = HistogramField()
    return {
        **_code_header(config, code),
        'spectra': {spectrum.r: histogram.to_representation(spectrum.counts) for spectrum in spectra},
    }


def extension_payload(config):
    """
    Weight distribution of the code extended to F_Q, Q = q^s.
    """
    code = code_from_config(config)
    Q = code.q ** config.s
    spectra = all_higher_spectra(code, jobs=config.jobs, force=config.force)
    return {
        **_code_header(config, code),
        'Q': Q,
        's': config.s,
        'spectrum': HistogramField().to_representation(extension_spectrum(spectra, code.q, Q)),
    }
