from core.enumerator import (
    average_weight,
    distance_from_enumerators,
    enumerator_from_group,
    has_parity_structure,
    macwilliams,
    shadow,
)
from core.stabilizer import INFINITY, read_generators

from ._base import WeightCommand, read_text


class Command(WeightCommand):
    help = 'Print the weight, dual and shadow enumerators of a stabilizer group'

    def add_arguments(self, parser):
        parser.add_argument(
            'generators',
            help='Generator file, one signed Pauli string per line ("-" for stdin)'
        )
        self.add_output_arguments(parser)

    def handle(self, *args, **options):
        group = read_generators(read_text(options['generators']))
        big_k = 2 ** group.k
        a = enumerator_from_group(group)
        b = macwilliams(a, big_k)
        sh = shadow(a, big_k)
        d = distance_from_enumerators(a, b)

        if options['format'] == 'json':
            self.emit_json({
                'n': group.n,
                'k': group.k,
                'A': [str(v) for v in a],
                'B': [str(v) for v in b],
                'Sh': [str(v) for v in sh],
                'd': 'inf' if d == INFINITY else d,
                'parity': has_parity_structure(a),
                'average_weight': str(average_weight(group)),
            }, options['output'])
            return

        lines = [
            f'A  = {a}',
            f'B  = {b}',
            f'Sh = {sh}',
            f"d from enumerators: {'inf' if d == INFINITY else d}",
            f'even/odd split holds: {has_parity_structure(a)}',
            f'average group weight: {average_weight(group)}',
        ]
        if not sh.is_nonnegative():
            lines.append(self.style.WARNING('shadow has a negative entry'))
        self.emit('\n'.join(lines), options['output'])
