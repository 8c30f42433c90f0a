from core.architecture import (
    default_eagle_centers,
    eagle_graph,
    load_centers,
    load_graph,
    min_radius,
    place_checks,
    radius_profile,
)
from core.forms import ArchitectureForm

from ._base import WeightCommand


class Command(WeightCommand):
    help = 'Smallest check radius on a device graph for which the geometry LP is feasible'
    form_class = ArchitectureForm

    def add_arguments(self, parser):
        parser.add_argument(
            '--graph',
            default='eagle',
            help='Edge-list file, or "eagle" for the shipped layout (default: eagle)'
        )
        parser.add_argument(
            '--centers',
            default='default',
            help='Center list file, or "default" for the shipped Eagle centers (default: default)'
        )
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--k', type=int, required=True)
        parser.add_argument('--d', type=int, required=True)
        parser.add_argument(
            '--radius',
            type=int,
            help='Check this single radius instead of searching'
        )
        parser.add_argument(
            '--r-max',
            type=int,
            default=8,
            help='Largest radius tried by the search (default: 8)'
        )
        parser.add_argument(
            '--profile',
            action='store_true',
            help='Report the verdict for every radius from 0 to r-max'
        )
        parser.add_argument(
            '--max-subset-size',
            type=int,
            help='Only count subsets of at most this many checks'
        )
        self.add_output_arguments(parser)

    def handle(self, *args, **options):
        config = self.validate(options)
        n, k, d = config['n'], config['k'], config['d']
        cap = config['max_subset_size']
        graph = eagle_graph() if config['graph'] == 'eagle' else load_graph(config['graph'])
        centers = default_eagle_centers() if config['centers'] == 'default' else load_centers(config['centers'])

        if config['radius'] is not None or options['profile']:
            radii = [config['radius']] if config['radius'] is not None else range(config['r_max'] + 1)
            profile = radius_profile(graph, centers, n, k, d, radii, cap)
            if options['format'] == 'json':
                self.emit_json([
                    {'radius': r, 'feasible': ok, 'max_support': place_checks(graph, centers, r).max_support}
                    for r, ok in profile
                ], options['output'])
            else:
                self.emit('\n'.join(
                    f"radius {r}: {'feasible' if ok else 'infeasible'}" for r, ok in profile
                ), options['output'])
            return

        self.progress(f'searching radii 0..{config["r_max"]} over {len(centers)} centers')
        radius = min_radius(graph, centers, n, k, d, config['r_max'], cap)
        if options['format'] == 'json':
            self.emit_json({'n': n, 'k': k, 'd': d, 'min_radius': radius}, options['output'])
        elif radius is None:
            self.emit(self.style.WARNING(f'no feasible radius up to {config["r_max"]}'), options['output'])
        else:
            self.emit(f'min radius {radius}', options['output'])
