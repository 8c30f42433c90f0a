from core.enumerator import enumerator_from_group
from core.pauli import format_pauli
from core.stabilizer import INFINITY, code_parameters, read_generators, weight_optimal_generating_set

from ._base import WeightCommand, read_text


class Command(WeightCommand):
    help = 'Report [[n,k,d]], W and W_avg of a stabilizer generator file'

    def add_arguments(self, parser):
        parser.add_argument(
            'generators',
            help='Generator file, one signed Pauli string per line ("-" for stdin)'
        )
        self.add_output_arguments(parser)

    def handle(self, *args, **options):
        group = read_generators(read_text(options['generators']))
        params = code_parameters(group)
        optimal = weight_optimal_generating_set(group)
        enumerator = enumerator_from_group(group)

        if options['format'] == 'json':
            self.emit_json({
                'n': params.n,
                'k': params.k,
                'd': 'inf' if params.d == INFINITY else params.d,
                'w': params.w,
                'w_avg': str(params.w_avg),
                'generators': [format_pauli(g) for g in optimal],
                'enumerator': enumerator.as_ints(),
            }, options['output'])
            return

        lines = [str(params), 'weight-optimal generating set:']
        lines.extend(f'  {format_pauli(g)}  (weight {g.weight})' for g in optimal)
        lines.append(f'A = {enumerator}')
        self.emit('\n'.join(lines), options['output'])
