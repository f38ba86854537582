from rest_framework.decorators import action

from drf_yasg.utils import swagger_auto_schema

from core.serializers import ExtendConfigSerializer, GhwConfigSerializer, RunConfigSerializer, SpectraConfigSerializer
from core.views import ComputationViewSet

from .services import extension_payload, ghw_payload, spectra_payload, weight_distribution_payload



class WeightViewSet(ComputationViewSet):
    """
    Weight distributions, generalized Hamming weights and higher weight spectra.
    """

    @swagger_auto_schema(query_serializer=RunConfigSerializer)
    @action(detail=False, methods=['get'])
    def distribution(self, request):
        return self.respond(request, RunConfigSerializer, weight_distribution_payload)


    @swagger_auto_schema(query_serializer=GhwConfigSerializer)
    @action(detail=False, methods=['get'])
    def ghw(self, request):
        return self.respond(request, GhwConfigSerializer, ghw_payload)


    @swagger_auto_schema(query_serializer=SpectraConfigSerializer)
    @action(detail=False, methods=['get'])
    def spectra(self, request):
        return self.respond(request, SpectraConfigSerializer, spectra_payload)


    @swagger_auto_schema(query_serializer=ExtendConfigSerializer)
    @action(detail=False, methods=['get'])
    def extend(self, request):
        return self.respond(request, ExtendConfigSerializer, extension_payload)
