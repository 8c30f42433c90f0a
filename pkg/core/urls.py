from django.urls import path
from . import views

app_name = 'core'

urlpatterns = [
    # Stored tables
    path('table.csv', views.table_csv, name='table_csv'),
    path('table.json', views.table_json, name='table_json'),

    # Catalog verification runs
    path('verifications/', views.verifications, name='verifications'),

    # API endpoints
    path('api/params/', views.api_params, name='api_params'),
    path('api/lp-check/', views.api_lp_check, name='api_lp_check'),
]
