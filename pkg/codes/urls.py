from django.urls import path, include

from rest_framework.routers import DefaultRouter

from .views import CodeViewSet



router = DefaultRouter()
router.register(r'', CodeViewSet, basename='codes')

urlpatterns = [
    path('', include(router.urls)),
]
