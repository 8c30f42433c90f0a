from core.architecture import eagle_graph, load_graph, radius_for_weight, structure_agnostic_weight_lb
from core.forms import ArchitectureForm
from core.stabilizer import INFINITY

from ._base import WeightCommand


class Command(WeightCommand):
    help = 'Lower bound on W from the coarse growth rows alone, with the radius it forces on a device graph'
    form_class = ArchitectureForm

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--k', type=int, required=True)
        parser.add_argument('--d', type=int, required=True)
        parser.add_argument(
            '--graph',
            help='Edge-list file, or "eagle" for the shipped 127-qubit heavy-hex layout'
        )
        self.add_output_arguments(parser)

    def handle(self, *args, **options):
        config = self.validate(options)
        n, k, d = config['n'], config['k'], config['d']
        wlb = structure_agnostic_weight_lb(n, k, d)

        radius = None
        if config['graph']:
            graph = eagle_graph() if config['graph'] == 'eagle' else load_graph(config['graph'])
            radius = radius_for_weight(graph, wlb)

        if options['format'] == 'json':
            self.emit_json({
                'n': n, 'k': k, 'd': d,
                'wlb': 'inf' if wlb == INFINITY else wlb,
                'min_radius': radius,
            }, options['output'])
            return

        if wlb == INFINITY:
            self.emit(self.style.WARNING(f'no [[{n},{k},{d}]] code'), options['output'])
            return
        lines = [f'W_LB >= {wlb}']
        if radius is not None:
            lines.append(f'radius >= {radius}')
        elif config['graph']:
            lines.append('no ball on the graph reaches that weight')
        self.emit('\n'.join(lines), options['output'])
