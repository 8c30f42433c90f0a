# models.py
from django.db import models

from .bounds import WeightTable, compute_table
from .stabilizer import INFINITY


class TableCell(models.Model):
    SOURCES = [
        ('rate-rule', 'Rate rule'),
        ('nk-bound', '2n/(n-k) bound'),
        ('lp', 'Weight LP'),
        ('no-code', 'No code'),
        ('override', 'Documented override'),
    ]

    n = models.PositiveSmallIntegerField()
    k = models.PositiveSmallIntegerField()
    d = models.PositiveSmallIntegerField()
    # NULL means no code exists
    wlb = models.PositiveSmallIntegerField(null=True, blank=True)
    wub = models.PositiveSmallIntegerField(null=True, blank=True)
    source = models.CharField(max_length=20, choices=SOURCES)
    citation = models.TextField(blank=True)
    computed_at = models.DateTimeField(auto_now=True)

    class Meta:
        ordering = ['n', 'd', 'k']
        constraints = [
            models.UniqueConstraint(fields=['n', 'k', 'd'], name='unique_cell'),
        ]

    def __str__(self):
        return f"({self.n},{self.k},{self.d}): {self.range_display}"

    @property
    def is_infinite(self):
        return self.wlb is None

    @property
    def range_display(self):
        if self.is_infinite:
            return 'inf'
        if self.wub is None:
            return f"{self.wlb} - ?"
        if self.wub == self.wlb:
            return str(self.wlb)
        return f"{self.wlb} - {self.wub}"

    @classmethod
    def store_table(cls, table, upper=None):
        """Replace stored cells with the rows of a WeightTable"""
        cells = []
        for (n, k, d), cell in table.items():
            cells.append(cls(
                n=n, k=k, d=d,
                wlb=None if cell.wlb == INFINITY else int(cell.wlb),
                wub=upper.get((n, k, d)) if upper is not None else None,
                source=cell.source,
                citation=cell.citation,
            ))
        cls.objects.filter(n__lte=table.max_n).delete()
        return cls.objects.bulk_create(cells)

    @classmethod
    def weight_table(cls, max_n):
        """Stored cells with n <= max_n, or None when some block length is missing"""
        table = WeightTable(max_n)
        present = set()
        for cell in cls.objects.filter(n__lte=max_n):
            wlb = INFINITY if cell.is_infinite else cell.wlb
            table.set(cell.n, cell.k, cell.d, wlb, cell.source, cell.citation)
            present.add(cell.n)
        if not set(range(4, max_n + 1)) <= present:
            return None
        return table

    @classmethod
    def table_below(cls, n):
        """Settled cells for every block length below n, stored or computed"""
        max_n = n - 1
        if max_n < 4:
            return WeightTable(max_n)
        stored = cls.weight_table(max_n)
        if stored is not None:
            return stored
        return compute_table(max_n)


class VerificationRecord(models.Model):
    STATUSES = [
        ('verified', 'Verified'),
        ('mismatch', 'Mismatch'),
        ('downgraded', 'Upper bound only'),
        ('incomplete', 'Incomplete'),
    ]

    label = models.CharField(max_length=40)
    expression = models.TextField()
    status = models.CharField(max_length=20, choices=STATUSES)
    n = models.PositiveSmallIntegerField(null=True, blank=True)
    k = models.PositiveSmallIntegerField(null=True, blank=True)
    d = models.PositiveSmallIntegerField(null=True, blank=True)
    w = models.PositiveSmallIntegerField(null=True, blank=True)
    w_upper = models.PositiveSmallIntegerField(null=True, blank=True)
    optimal = models.BooleanField(default=True)
    message = models.TextField(blank=True)
    verified_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ['-verified_at', 'label']

    def __str__(self):
        return f"{self.label} - {self.get_status_display()}"

    @property
    def passed(self):
        return self.status in ('verified', 'downgraded')

    @classmethod
    def from_report(cls, report, expression):
        d = report.d
        return cls(
            label=str(report.label),
            expression=expression,
            status=report.status.value,
            n=report.n,
            k=report.k,
            d=None if d is None or d == INFINITY else int(d),
            w=report.w,
            w_upper=report.w_upper,
            optimal=report.optimal,
            message='; '.join(filter(None, [', '.join(report.mismatches), report.message])),
        )
