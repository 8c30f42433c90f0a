# core/tests/test_commands.py
import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import TestCase

from core.models import TableCell, VerificationRecord

G1 = 'XXXI\nIYYY\nZIZZ\n'


class CommandTestCase(TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write(self, name, text):
        path = Path(self.tmp.name) / name
        path.write_text(text)
        return str(path)

    def call(self, *args, **options):
        out, err = StringIO(), StringIO()
        call_command(*args, stdout=out, stderr=err, **options)
        return out.getvalue(), err.getvalue()

    def assertExitCode(self, code, *args, **options):
        with self.assertRaises(CommandError) as ctx:
            self.call(*args, **options)
        self.assertEqual(ctx.exception.returncode, code)
        return ctx.exception


class ParamsCommandTest(CommandTestCase):
    def test_text_output(self):
        out, _ = self.call('params', self.write('g1.txt', G1))
        lines = out.splitlines()
        self.assertEqual(lines[0], '[[4,1,2]] W=3 W_avg=3')
        self.assertEqual(lines[1], 'weight-optimal generating set:')
        self.assertEqual(len([line for line in lines if '(weight 3)' in line]), 3)
        self.assertEqual(lines[-1], 'A = (1, 0, 0, 4, 3)')

    def test_json_output(self):
        out, _ = self.call('params', self.write('g2.txt', 'ZZII\nIIZZ\nXXXX\n'), format='json')
        data = json.loads(out)
        self.assertEqual((data['n'], data['k'], data['d'], data['w']), (4, 1, 2, 4))
        self.assertEqual(data['w_avg'], '8/3')

    def test_output_file(self):
        target = str(Path(self.tmp.name) / 'params.txt')
        out, err = self.call('params', self.write('g1.txt', G1), output=target)
        self.assertEqual(out, '')
        self.assertIn('Wrote', err)
        self.assertTrue(Path(target).read_text().startswith('[[4,1,2]]'))

    def test_bad_input(self):
        """Test that parse errors and missing files are usage errors"""
        self.assertExitCode(1, 'params', self.write('bad.txt', 'XI\nZI\n'))
        self.assertExitCode(1, 'params', self.write('junk.txt', 'XQ\n'))
        self.assertExitCode(1, 'params', self.write('empty.txt', '# nothing here\n'))
        self.assertExitCode(1, 'params', str(Path(self.tmp.name) / 'missing.txt'))


class LpCheckCommandTest(CommandTestCase):
    def test_verdicts(self):
        out, _ = self.call('lp_check', n=5, k=1, d=3, w=4)
        self.assertEqual(out.strip(), 'feasible')
        out, _ = self.call('lp_check', n=5, k=2, d=3, w=4)
        self.assertEqual(out.strip(), 'infeasible (no [[5,2,3]] code)')

    def test_json_output(self):
        out, _ = self.call('lp_check', n=4, k=1, d=2, w=3, format='json')
        self.assertEqual(json.loads(out), {'n': 4, 'k': 1, 'd': 2, 'w': 3, 'feasible': True, 'reason': ''})

    def test_stored_table_file(self):
        path = str(Path(self.tmp.name) / 'table.json')
        self.call('table', max_n=4, format='json', output=path, no_upper=True)
        out, _ = self.call('lp_check', n=5, k=1, d=3, w=4, table=path)
        self.assertEqual(out.strip(), 'feasible')
        error = self.assertExitCode(1, 'lp_check', n=6, k=1, d=3, w=4, table=path)
        self.assertIn('stops at n=4', str(error))

    def test_usage_errors(self):
        error = self.assertExitCode(1, 'lp_check', n=4, k=0, d=2, w=3)
        self.assertIn('1 <= k < n', str(error))
        error = self.assertExitCode(1, 'lp_check', n=4, k=1, d=2, w=0)
        self.assertIn('--w:', str(error))


class TableCommandTest(CommandTestCase):
    def test_csv_output(self):
        out, err = self.call('table', max_n=4, no_upper=True)
        lines = out.splitlines()
        self.assertEqual(lines[0], 'n,k,d,wlb,source')
        self.assertEqual(lines[1], '4,1,2,3,rate-rule')
        self.assertIn('n=4', err)

    def test_text_output(self):
        out, _ = self.call('table', max_n=4, no_upper=True, format='text')
        first = out.splitlines()[0].split()
        self.assertEqual(first, ['4', '1', '2', '3-?', 'rate-rule'])

    def test_save(self):
        _, err = self.call('table', max_n=4, no_upper=True, save=True)
        self.assertIn('Stored', err)
        self.assertEqual(TableCell.objects.get(n=4, k=1, d=2).wlb, 3)

    def test_max_n_too_small(self):
        error = self.assertExitCode(1, 'table', max_n=3)
        self.assertIn('--max-n:', str(error))


class ArchBoundCommandTest(CommandTestCase):
    def test_path_graph(self):
        graph = self.write('path.edges', '0 1\n1 2\n2 3\n3 4\n')
        out, _ = self.call('arch_bound', n=5, k=1, d=3, graph=graph, format='json')
        data = json.loads(out)
        self.assertLessEqual(data['wlb'], 4)
        self.assertEqual(data['min_radius'], -(-(data['wlb'] - 1) // 2))

    def test_no_code(self):
        out, _ = self.call('arch_bound', n=5, k=2, d=3)
        self.assertIn('no [[5,2,3]] code', out)

    def test_bad_graph(self):
        self.assertExitCode(1, 'arch_bound', n=5, k=1, d=3, graph=self.write('loop.edges', '0 0\n'))


class ReduceCommandTest(CommandTestCase):
    def test_random_instances_agree(self):
        out, _ = self.call('reduce', random=8, seed=1, m=2, length=5)
        lines = out.splitlines()
        self.assertEqual(len(lines), 8)
        for line in lines:
            verdicts = line.split(':', 1)[1].split()[1::2]
            self.assertEqual(len(set(verdicts)), 1, line)

    def test_transform(self):
        instance = self.write('mld.txt', '1 1 0\n0 1 1\n10\n1\n')
        out, _ = self.call('reduce', instance=instance, mode='transform')
        lines = out.splitlines()
        self.assertEqual(lines[0], '# instance 1: shortest basis, threshold last')
        self.assertIn('# instance 1: stabilizer generators, threshold 4', lines)
        self.assertTrue(all(set(line) <= set('IZ') for line in lines[lines.index('# instance 1: stabilizer generators, threshold 4') + 1:]))

    def test_needs_instances(self):
        self.assertExitCode(1, 'reduce')
        self.assertExitCode(1, 'reduce', random=2, m=4, length=3)


class VerifyCatalogCommandTest(CommandTestCase):
    def test_selected_labels(self):
        out, err = self.call('verify_catalog', label=['[[4,1,2;3]]', '[[5,1,3;4]]'], save=True)
        self.assertIn('[[4,1,2;3]]: verified', out)
        self.assertIn('2 entries checked', err)
        self.assertEqual(VerificationRecord.objects.filter(status='verified').count(), 2)

    def test_mismatch_exit_code(self):
        catalog = self.write('catalog.json', json.dumps({'entries': [
            {'label': '[[4,1,2;3]]', 'expr': 'GENS(XXXI, IYYY, ZIZZ)'},
            {'label': '[[4,2,2;3]]', 'expr': 'GENS(XXXX, ZZZZ)'},
        ]}))
        error = self.assertExitCode(3, 'verify_catalog', catalog=catalog)
        self.assertIn('1 of 2 entries', str(error))

    def test_json_output(self):
        out, _ = self.call('verify_catalog', label=['[[4,2,2;4]]'], format='json')
        self.assertEqual(json.loads(out)[0]['status'], 'verified')


class EnumeratorsCommandTest(CommandTestCase):
    def test_small_code(self):
        out, _ = self.call('enumerators', self.write('g1.txt', G1))
        lines = out.splitlines()
        self.assertEqual(lines[0], 'A  = (1, 0, 0, 4, 3)')
        self.assertIn('d from enumerators: 2', lines)
        self.assertIn('average group weight: 3', lines)

    def test_json_output(self):
        out, _ = self.call('enumerators', self.write('g1.txt', G1), format='json')
        data = json.loads(out)
        self.assertEqual(data['A'], ['1', '0', '0', '4', '3'])
        self.assertEqual(data['d'], 2)
        self.assertTrue(data['parity'])


class ArchSearchCommandTest(CommandTestCase):
    def test_profile_on_path(self):
        graph = self.write('path.edges', '0 1\n1 2\n2 3\n3 4\n')
        centers = self.write('centers.txt', '# one check per line\n0\n1\n2\n3\n')
        out, _ = self.call(
            'arch_search', graph=graph, centers=centers, n=5, k=1, d=3, profile=True, r_max=2, format='json',
        )
        rows = json.loads(out)
        self.assertEqual([row['radius'] for row in rows], [0, 1, 2])
        self.assertEqual([row['max_support'] for row in rows], [1, 3, 5])
        verdicts = [row['feasible'] for row in rows]
        self.assertEqual(verdicts, sorted(verdicts))

    def test_bad_centers(self):
        graph = self.write('path.edges', '0 1\n1 2\n')
        centers = self.write('centers.txt', 'zero\n')
        self.assertExitCode(1, 'arch_search', graph=graph, centers=centers, n=3, k=1, d=2, radius=1)
