from rest_framework import permissions

from drf_yasg.views import get_schema_view
from drf_yasg import openapi
from django.urls import path, include, re_path



schema_view = get_schema_view(
   openapi.Info(
      title="Symcode API",
      default_version='v1',
      description="Codes from elementary symmetric polynomials: construction, weights and verification",
      license=openapi.License(name="MIT License"),
   ),
   public=True,
   permission_classes=(permissions.AllowAny,),
)



urlpatterns = [
    path('sympoly/', include('sympoly.urls')),    # Distinguished-zero counting
    path('codes/', include('codes.urls')),        # Code construction and parameters
    path('weights/', include('weights.urls')),    # Weight spectra and generalized Hamming weights
    path('verifier/', include('verifier.urls')),  # Closed forms against brute force
    # Swagger UI (HTML view)
    path('swagger/', schema_view.with_ui('swagger', cache_timeout=0), name='schema-swagger-ui'),
    # ReDoc (Alternative documentation)
    path('redoc/', schema_view.with_ui('redoc', cache_timeout=0), name='schema-redoc'),
    # Raw JSON/YAML schema
    re_path(r'^swagger\.(?P<format>json|yaml)$', schema_view.without_ui(cache_timeout=0), name='schema-json'),
]
