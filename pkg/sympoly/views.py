from rest_framework.decorators import action

from drf_yasg.utils import swagger_auto_schema

from core.serializers import ZeroesConfigSerializer
from core.views import ComputationViewSet

from .services import zeroes_payload



class ZeroesViewSet(ComputationViewSet):

    @swagger_auto_schema(query_serializer=ZeroesConfigSerializer)
    @action(detail=False, methods=['get'])
    def zeroes(self, request):
        """
        Distinguished-zero count, bounds and classification of one polynomial.
        """
        return self.respond(request, ZeroesConfigSerializer, zeroes_payload)
