from .serializers import VerificationReportSerializer
from .suites import run_suite



def verify_payload(config):
    report = run_suite(config.suite, field=config.field, m=config.m, jobs=config.jobs, force=config.force)
    return {'suite': config.suite, **VerificationReportSerializer(report).data}
