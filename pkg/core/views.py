import csv

from django.http import HttpResponse, JsonResponse
from django.views.decorators.http import require_GET, require_POST

from .bounds import check_weight
from .conf import budget
from .enumerator import enumerator_from_group
from .exceptions import QWeightError
from .forms import GeneratorsForm, LpCheckForm
from .models import TableCell, VerificationRecord
from .pauli import format_pauli
from .stabilizer import INFINITY, code_parameters, weight_optimal_generating_set


# =============================================================================
# UTILITY FUNCTIONS
# =============================================================================

def cell_as_dict(cell):
    return {
        'n': cell.n,
        'k': cell.k,
        'd': cell.d,
        'wlb': 'inf' if cell.is_infinite else cell.wlb,
        'wub': cell.wub,
        'range': cell.range_display,
        'source': cell.source,
        'citation': cell.citation,
    }


def form_errors(form):
    """Flatten form errors into a JSON error response"""
    errors = {field: [str(e) for e in errs] for field, errs in form.errors.items()}
    return JsonResponse({'errors': errors}, status=400)


# =============================================================================
# TABLE VIEWS
# =============================================================================

@require_GET
def table_csv(request):
    """Stored weight table as a CSV download"""
    response = HttpResponse(content_type='text/csv')
    response['Content-Disposition'] = 'attachment; filename="weight_table.csv"'

    writer = csv.writer(response)
    writer.writerow(['n', 'k', 'd', 'wlb', 'wub', 'source'])
    for cell in TableCell.objects.all():
        writer.writerow([
            cell.n,
            cell.k,
            cell.d,
            'inf' if cell.is_infinite else cell.wlb,
            '' if cell.wub is None else cell.wub,
            cell.source,
        ])
    return response


@require_GET
def table_json(request):
    cells = [cell_as_dict(cell) for cell in TableCell.objects.all()]
    return JsonResponse({'cells': cells})


@require_GET
def verifications(request):
    records = VerificationRecord.objects.all()
    status = request.GET.get('status')
    if status:
        records = records.filter(status=status)
    results = [
        {
            'label': r.label,
            'expression': r.expression,
            'status': r.status,
            'passed': r.passed,
            'w': r.w,
            'w_upper': r.w_upper,
            'message': r.message,
            'verified_at': r.verified_at.isoformat(),
        }
        for r in records
    ]
    return JsonResponse(results, safe=False)


# =============================================================================
# API VIEWS
# =============================================================================

@require_POST
def api_params(request):
    """API endpoint for the parameters of a posted generator list"""
    form = GeneratorsForm(request.POST)
    if not form.is_valid():
        return form_errors(form)
    group = form.cleaned_data['generators']
    try:
        params = code_parameters(group)
        optimal = weight_optimal_generating_set(group)
        enumerator = enumerator_from_group(group)
    except QWeightError as exc:
        return JsonResponse({'errors': {'__all__': [str(exc)]}}, status=400)
    return JsonResponse({
        'n': params.n,
        'k': params.k,
        'd': 'inf' if params.d == INFINITY else params.d,
        'w': params.w,
        'w_avg': str(params.w_avg),
        'label': params.label,
        'generators': [format_pauli(g) for g in optimal],
        'enumerator': enumerator.as_ints(),
    })


@require_GET
def api_lp_check(request):
    """API endpoint for a single weight LP verdict"""
    form = LpCheckForm(request.GET)
    if not form.is_valid():
        return form_errors(form)
    n, k, d, w = (form.cleaned_data[key] for key in ('n', 'k', 'd', 'w'))
    if n > budget('WEB_MAX_N') and TableCell.weight_table(n - 1) is None:
        return JsonResponse(
            {'errors': {'n': [f'no stored table below n={n}; run the table command first']}},
            status=400,
        )
    verdict = check_weight(n, k, d, w, TableCell.table_below(n))
    return JsonResponse({
        'n': n,
        'k': k,
        'd': d,
        'w': w,
        'feasible': verdict.feasible,
        'reason': verdict.reason,
        'verdict': str(verdict),
    })
