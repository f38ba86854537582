from django.urls import path, include

from rest_framework.routers import DefaultRouter

from .views import VerifierViewSet



router = DefaultRouter()
router.register(r'', VerifierViewSet, basename='verifier')

urlpatterns = [
    path('', include(router.urls)),
]
