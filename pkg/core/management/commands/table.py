import io

from core.bounds import apply_overrides, compute_table, is_infinite, load_overrides, write_csv, write_json
from core.catalog import joined_ranges, load_catalog, upper_bound_table, verify_all
from core.conf import data_path
from core.forms import TableForm
from core.models import TableCell

from ._base import WeightCommand, jobs_option


class Command(WeightCommand):
    help = 'Compute the W_LB table for 4 <= n <= max-n, joined with verified catalog upper bounds'
    form_class = TableForm

    def add_arguments(self, parser):
        parser.add_argument(
            '--max-n',
            type=int,
            required=True,
            help='Largest block length (at least 4)'
        )
        self.add_jobs_argument(parser)
        self.add_output_arguments(parser, formats=('csv', 'json', 'text'), default='csv')
        parser.add_argument(
            '--overrides',
            help='Overrides file (default: the shipped one)'
        )
        parser.add_argument(
            '--no-overrides',
            action='store_true',
            help='Report the algorithmic table without documented overrides'
        )
        parser.add_argument(
            '--catalog',
            help='Catalog document for the upper bounds (default: the shipped one)'
        )
        parser.add_argument(
            '--no-upper',
            action='store_true',
            help='Skip catalog verification and leave the upper ends empty'
        )
        parser.add_argument(
            '--save',
            action='store_true',
            help='Store the cells in the database'
        )

    def handle(self, *args, **options):
        config = self.validate(options)
        jobs = jobs_option(config['jobs'])

        table = compute_table(config['max_n'], jobs=jobs, progress=self.progress)
        if not options['no_overrides']:
            path = config['overrides'] or data_path('OVERRIDES')
            apply_overrides(table, load_overrides(path))

        upper = None
        if not options['no_upper']:
            catalog = load_catalog(options['catalog'])
            upper = upper_bound_table(verify_all(catalog, jobs=jobs, progress=self.progress))

        if options['save']:
            stored = TableCell.store_table(table, upper)
            self.stderr.write(self.style.SUCCESS(f'Stored {len(stored)} cells'))

        stream = io.StringIO()
        if config['format'] == 'csv':
            write_csv(table, stream, upper)
        elif config['format'] == 'json':
            write_json(table, stream, upper)
        else:
            for item in joined_ranges(table, upper or {}):
                wlb = 'inf' if is_infinite(item.wlb) else item.wlb
                wub = '?' if item.wub is None else item.wub
                span = str(wlb) if item.tight or wlb == 'inf' else f'{wlb}-{wub}'
                stream.write(f'{item.n:3d} {item.k:3d} {item.d:3d}  {span:>6}  {table[item.n, item.k, item.d].source}\n')
        self.emit(stream.getvalue(), config['output'])
