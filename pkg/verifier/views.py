from rest_framework.decorators import action

from drf_yasg.utils import swagger_auto_schema

from core.serializers import VerifyConfigSerializer
from core.views import ComputationViewSet

from .services import verify_payload



class VerifierViewSet(ComputationViewSet):
    """
    Runs the verification suites; a report with failed checks is still a 200 with passed=false.
    """

    @swagger_auto_schema(query_serializer=VerifyConfigSerializer)
    @action(detail=False, methods=['get'])
    def run(self, request):
        return self.respond(request, VerifyConfigSerializer, verify_payload)
