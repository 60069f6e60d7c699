"""
API URLs.
"""

from django.urls import path

from . import views

urlpatterns = [
    path('homotopy/', views.HomotopyView.as_view(), name='api-homotopy'),
    path('adams/', views.AdamsView.as_view(), name='api-adams'),
    path('cohomology/', views.CohomologyView.as_view(), name='api-cohomology'),
]
