import logging

from rest_framework import status, viewsets
from rest_framework.permissions import AllowAny
from rest_framework.response import Response

from django.core.exceptions import ValidationError as DjangoValidationError

from .exceptions import SymcodeError


logger = logging.getLogger(__name__)



class ComputationViewSet(viewsets.ViewSet):
    """
    Base ViewSet of the computational endpoints. Query parameters are validated with the
    same RunConfig serializers as the command line, and responses carry the same JSON
    documents as --format json.
    """
    permission_classes = [AllowAny]

    def respond(self, request, serializer_class, compute):
        serializer = serializer_class(data=request.query_params.dict())
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        config = serializer.save()

        try:
            payload = compute(config)
        except DjangoValidationError as exc:
            return Response(exc.message_dict, status=status.HTTP_400_BAD_REQUEST)
        except SymcodeError as exc:
            # Covers sweeps above the configured caps as well as closed forms that do not apply
            logger.info("Rejected %s: %s", request.path, exc)
            return Response({"detail": str(exc)}, status=status.HTTP_400_BAD_REQUEST)
        return Response(payload)
