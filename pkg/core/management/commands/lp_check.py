from django.core.management.base import CommandError

from core.bounds import WeightTable, check_weight, compute_table, read_json
from core.forms import LpCheckForm

from ._base import USAGE, WeightCommand, jobs_option


class Command(WeightCommand):
    help = 'Decide whether the weight LP family rules out W = w for [[n,k,d]] codes'
    form_class = LpCheckForm

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--k', type=int, required=True)
        parser.add_argument('--d', type=int, required=True)
        parser.add_argument('--w', type=int, required=True)
        parser.add_argument(
            '--table',
            help='JSON table from the table command covering every n below --n '
                 '(default: compute it)'
        )
        self.add_jobs_argument(parser)
        self.add_output_arguments(parser)

    def smaller_table(self, n, path, jobs):
        if path:
            with open(path) as stream:
                table = read_json(stream)
            if table.max_n < n - 1:
                raise CommandError(f'{path} stops at n={table.max_n}, need n={n - 1}', returncode=USAGE)
            return table
        if n - 1 < 4:
            return WeightTable(n - 1)
        return compute_table(n - 1, jobs=jobs, progress=self.progress)

    def handle(self, *args, **options):
        config = self.validate(options)
        n, k, d, w = (config[key] for key in ('n', 'k', 'd', 'w'))
        table = self.smaller_table(n, options['table'], jobs_option(options['jobs']))
        verdict = check_weight(n, k, d, w, table)

        if options['format'] == 'json':
            self.emit_json({
                'n': n, 'k': k, 'd': d, 'w': w,
                'feasible': verdict.feasible,
                'reason': verdict.reason,
            }, options['output'])
        else:
            self.emit(str(verdict), options['output'])
