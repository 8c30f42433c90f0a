# core/tests/test_catalog.py
import tempfile
from pathlib import Path

from django.test import SimpleTestCase, override_settings, tag

from core.bounds import LP, WeightTable, compute_table, is_infinite
from core.catalog import (
    Catalog, CatalogEntry, Label, Node, Status, VerificationReport, builder_surface_code, joined_ranges,
    load_catalog, parse_expression, read_catalog, surface_code, upper_bound_table, verify, verify_all,
    verify_group,
)
from core.conf import data_path
from core.exceptions import CatalogError, ChecksumMismatch, CyclicReference, DimensionError
from core.stabilizer import StabilizerGenerators, code_parameters

# smallest labeled w per cell in the shipped catalog; these cells sit below
# the older published ranges because the catalog carries a better witness:
# (10,4,3)=6, (12,6,3)=8, (10,1,4)=(11,1,4)=(12,1,4)=4, (12,3,4)=6, (12,4,3)=6
CATALOG_UPPER = {
    10: {2: [3, 3, 4, 4, 4, 6, 7, 10], 3: [4, 4, 5, 6], 4: [4, 6]},
    11: {2: [3, 3, 4, 4, 4, 5, 6, 8], 3: [4, 4, 5, 6, 8], 4: [4, 6], 5: [6]},
    12: {2: [3, 3, 3, 4, 4, 4, 6, 6, 8, 12], 3: [4, 4, 5, 6, 8, 8], 4: [4, 6, 6, 8], 5: [6]},
}

SMALL_ENTRIES = [
    '[[4,1,2;3]]', '[[4,2,2;4]]', '[[5,1,2;3]]', '[[5,1,3;4]]', '[[6,4,2;6]]', '[[8,2,2;3]]', '[[9,1,3;4]]',
]


def entry(label, expr, optimal=True):
    return CatalogEntry(Label.parse(label), expr, optimal)


class LabelTest(SimpleTestCase):
    def test_parse(self):
        label = Label.parse(' [[ 9, 1, 3 ; 4 ]] ')
        self.assertEqual(label, Label(9, 1, 3, 4))
        self.assertEqual(label.cell, (9, 1, 3))
        self.assertEqual(str(label), '[[9,1,3;4]]')

    def test_bad_labels(self):
        for text in ['[[9,1,3]]', '[9,1,3;4]', '[[9,1,3;w]]']:
            with self.subTest(text=text), self.assertRaises(CatalogError):
                Label.parse(text)


class ExpressionTest(SimpleTestCase):
    def test_nested_expression(self):
        node = parse_expression('TENSOR(GENS(XX, ZZ), POW(SURFACE(3), 2))')
        self.assertEqual(node, Node('tensor', (
            Node('gens', ('XX', 'ZZ')),
            Node('pow', (Node('surface', (3,)), 2)),
        )))

    def test_reference(self):
        node = parse_expression('PAD([[4,1,2;3]], 2)')
        self.assertEqual(node, Node('pad', (Node('ref', (Label(4, 1, 2, 3),)), 2)))

    def test_signed_generators(self):
        self.assertEqual(parse_expression('GENS(-XX, +ZZ)').args, ('-XX', '+ZZ'))

    def test_parse_errors(self):
        for text in ['FOO(3)', 'GENS(XX', 'POW(GENS(XX), x)', 'SURFACE(3) 4', 'PAD(GENS(XX), ZZ)', '']:
            with self.subTest(text=text), self.assertRaises(CatalogError):
                parse_expression(text)


class CatalogTest(SimpleTestCase):
    def test_expand_references(self):
        catalog = Catalog([
            entry('[[4,1,2;3]]', 'GENS(XXXI, IYYY, ZIZZ)'),
            entry('[[8,2,2;3]]', 'POW([[4,1,2;3]], 2)'),
            entry('[[9,2,2;3]]', 'PAD([[8,2,2;3]], 1)'),
        ])
        group = catalog.expand('[[9,2,2;3]]')
        self.assertEqual((group.n, group.k), (9, 2))
        self.assertEqual(code_parameters(group).label, '[[9,2,2;3]]')

    def test_duplicate_and_missing(self):
        with self.assertRaises(CatalogError):
            Catalog([entry('[[4,2,2;4]]', 'GENS(XXXX, ZZZZ)')] * 2)
        with self.assertRaises(CatalogError):
            Catalog()['[[4,2,2;4]]']

    def test_wrong_qubit_count(self):
        catalog = Catalog([entry('[[5,2,2;4]]', 'GENS(XXXX, ZZZZ)')])
        with self.assertRaises(DimensionError):
            catalog.expand('[[5,2,2;4]]')

    def test_cyclic_reference(self):
        catalog = Catalog([
            entry('[[4,1,2;3]]', '[[4,2,2;4]]'),
            entry('[[4,2,2;4]]', 'PAD([[4,1,2;3]], 0)'),
        ])
        with self.assertRaises(CyclicReference):
            catalog.expand('[[4,1,2;3]]')
        report = verify(catalog['[[4,2,2;4]]'], catalog)
        self.assertIs(report.status, Status.MISMATCH)
        self.assertIn('cyclic reference', report.message)


class SurfaceCodeTest(SimpleTestCase):
    def test_distance_three(self):
        group = surface_code(3)
        self.assertEqual((group.n, group.r), (9, 8))
        self.assertEqual(sorted(g.weight for g in group), [2, 2, 2, 2, 4, 4, 4, 4])
        self.assertEqual(code_parameters(group).label, '[[9,1,3;4]]')

    def test_builder(self):
        self.assertEqual(builder_surface_code(3).label, Label(9, 1, 3, 4))
        with self.assertRaises(DimensionError):
            surface_code(1)


class VerifyTest(SimpleTestCase):
    def test_verified(self):
        report = verify(entry('[[4,1,2;3]]', 'GENS(XXXI, IYYY, ZIZZ)'))
        self.assertIs(report.status, Status.VERIFIED)
        self.assertTrue(report.ok)
        self.assertEqual((report.n, report.k, report.d, report.w), (4, 1, 2, 3))

    def test_mismatch(self):
        group = StabilizerGenerators.from_strings(['XXXI', 'IYYY', 'ZIZZ'])
        report = verify_group(Label(4, 1, 2, 4), group)
        self.assertIs(report.status, Status.MISMATCH)
        self.assertEqual(report.mismatches, ('W=3',))
        self.assertFalse(report.ok)

    @override_settings(QWEIGHT={'DISTANCE_MAX_N': 4})
    def test_downgraded(self):
        group = StabilizerGenerators.from_strings(['XZZXI', 'IXZZX', 'XIXZZ', 'ZXIXZ'])
        report = verify_group(Label(5, 1, 3, 4), group)
        self.assertIs(report.status, Status.DOWNGRADED)
        self.assertTrue(report.ok)
        self.assertIsNone(report.d)
        self.assertIn('distance not computed', report.message)

    def test_logical_search_without_result(self):
        """Test that an unreachable logical extension leaves the entry incomplete"""
        catalog = Catalog([
            entry('[[4,2,2;4]]', 'GENS(XXXX, ZZZZ)'),
            entry('[[4,1,2;3]]', 'ADDLOGICAL([[4,2,2;4]], 4)'),
        ])
        with self.assertLogs('core.catalog', 'WARNING'):
            report = verify(catalog['[[4,1,2;3]]'], catalog)
        self.assertIs(report.status, Status.INCOMPLETE)
        self.assertFalse(report.ok)

    def test_report_dict(self):
        report = verify(entry('[[4,4,1;1]]', 'GENS(XXXX, ZZZZ)'))
        self.assertIs(report.status, Status.MISMATCH)
        data = report.as_dict()
        self.assertEqual(data['label'], '[[4,4,1;1]]')
        self.assertEqual(data['status'], 'mismatch')
        self.assertIn('k=2', data['mismatches'])

    def test_progress_lines(self):
        catalog = Catalog([entry('[[4,2,2;4]]', 'GENS(XXXX, ZZZZ)'), entry('[[6,2,2;4]]', 'PAD([[4,2,2;4]], 2)')])
        lines = []
        reports = verify_all(catalog, progress=lines.append)
        self.assertEqual([r.status for r in reports], [Status.VERIFIED, Status.VERIFIED])
        self.assertEqual(lines, ['[[4,2,2;4]]: verified', '[[6,2,2;4]]: verified'])


class UpperBoundTest(SimpleTestCase):
    def test_smallest_verified_label_wins(self):
        reports = [
            VerificationReport(Label(10, 1, 2, 4), Status.VERIFIED),
            VerificationReport(Label(10, 1, 2, 3), Status.DOWNGRADED),
            VerificationReport(Label(10, 2, 2, 2), Status.MISMATCH),
        ]
        upper = upper_bound_table(reports)
        self.assertEqual(upper[(10, 1, 2)], 3)
        self.assertEqual(upper.sources[(10, 1, 2)], Label(10, 1, 2, 3))
        self.assertNotIn((10, 2, 2), upper)

    def test_joined_ranges(self):
        table = WeightTable(5)
        table.set(5, 1, 3, 4, LP)
        table.set(5, 2, 3, float('inf'), LP)
        upper = upper_bound_table([VerificationReport(Label(5, 1, 3, 4), Status.VERIFIED)])
        first, second = joined_ranges(table, upper)
        self.assertTrue(first.tight)
        self.assertIsNone(second.wub)
        self.assertFalse(second.tight)


class LoadingTest(SimpleTestCase):
    def test_shipped_catalog(self):
        catalog = load_catalog()
        self.assertEqual(len(catalog), 85)
        self.assertEqual(catalog['[[9,1,3;4]]'].expr, 'SURFACE(3)')

    def test_shipped_upper_bounds(self):
        """Test that the shipped labels give the expected upper bounds for n = 10..12"""
        catalog = load_catalog()
        upper = upper_bound_table(VerificationReport(e.label, Status.VERIFIED) for e in catalog)
        for n, columns in CATALOG_UPPER.items():
            for d, values in columns.items():
                got = [upper.get((n, k, d)) for k in range(1, len(values) + 1)]
                self.assertEqual(got, values, f'n={n}, d={d}')

    def test_checksum_mismatch(self):
        with override_settings(QWEIGHT={'CATALOG_SHA256': '0' * 64}):
            with self.assertRaises(ChecksumMismatch):
                load_catalog()
            self.assertEqual(len(load_catalog(verify_checksum=False)), 85)

    def test_other_paths_skip_checksum(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'catalog.json'
            path.write_text('{"entries": [{"label": "[[4,2,2;4]]", "expr": "GENS(XXXX, ZZZZ)"}]}')
            with override_settings(QWEIGHT={'CATALOG_SHA256': '0' * 64, 'CATALOG': data_path('CATALOG')}):
                catalog = load_catalog(path)
        self.assertEqual(len(catalog), 1)
        self.assertTrue(catalog['[[4,2,2;4]]'].optimal)

    def test_read_errors(self):
        with self.assertRaises(CatalogError):
            read_catalog('not json')
        with self.assertRaises(CatalogError):
            read_catalog('{"entries": [{"label": "[[4,2,2;4]]"}]}')

    @tag('slow')
    def test_small_entries_verify(self):
        catalog = load_catalog()
        for label in SMALL_ENTRIES:
            with self.subTest(label=label):
                self.assertIs(verify(catalog[label], catalog).status, Status.VERIFIED)

    @tag('slow')
    def test_whole_catalog_verifies(self):
        reports = verify_all(load_catalog())
        self.assertEqual(len(reports), 85)
        failed = [f'{r.label}: {r.status.value}' for r in reports if not r.ok]
        self.assertEqual(failed, [])

    @tag('slow')
    def test_small_cells_are_tight(self):
        """Test that every finite cell up to n = 9 meets a verified construction"""
        catalog = load_catalog()
        reports = verify_all(Catalog([e for e in catalog if e.label.n <= 9]))
        ranges = joined_ranges(compute_table(9), upper_bound_table(reports))
        loose = [(r.n, r.k, r.d, r.wlb, r.wub) for r in ranges if not is_infinite(r.wlb) and not r.tight]
        self.assertEqual(loose, [])
