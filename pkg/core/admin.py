from django.contrib import admin

from .models import TableCell, VerificationRecord


@admin.register(TableCell)
class TableCellAdmin(admin.ModelAdmin):
    list_display = ('n', 'k', 'd', 'wlb', 'wub', 'source')
    list_filter = ('source', 'd')
    search_fields = ('citation',)
    readonly_fields = ('computed_at',)


@admin.register(VerificationRecord)
class VerificationRecordAdmin(admin.ModelAdmin):
    list_display = ('label', 'status', 'w', 'w_upper', 'optimal', 'verified_at')
    list_filter = ('status', 'optimal')
    search_fields = ('label', 'expression')
