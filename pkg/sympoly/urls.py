from django.urls import path, include

from rest_framework.routers import DefaultRouter

from .views import ZeroesViewSet



router = DefaultRouter()
router.register(r'', ZeroesViewSet, basename='sympoly')

urlpatterns = [
    path('', include(router.urls)),
]
