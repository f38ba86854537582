from rest_framework.decorators import action

from drf_yasg.utils import swagger_auto_schema

from core.serializers import RunConfigSerializer
from core.views import ComputationViewSet

from .services import genmat_payload, params_payload



class CodeViewSet(ComputationViewSet):
    """
    Construction and parameters of the codes on distinguished points or orbit representatives.
    """

    @swagger_auto_schema(query_serializer=RunConfigSerializer)
    @action(detail=False, methods=['get'])
    def params(self, request):
        return self.respond(request, RunConfigSerializer, params_payload)


    @swagger_auto_schema(query_serializer=RunConfigSerializer)
    @action(detail=False, methods=['get'])
    def genmat(self, request):
        return self.respond(request, RunConfigSerializer, genmat_payload)
