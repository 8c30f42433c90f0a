from django.contrib import admin
from django.urls import path, include

urlpatterns = [
    path('admin/', admin.site.urls),
    path('', include('core.urls')),
]

admin.site.site_header = "Stabilizer Weight Bounds"
admin.site.site_title = "Weight Bounds Admin"
admin.site.index_title = "Stored tables and verifications"
