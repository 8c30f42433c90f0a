import numpy as np
from django.core.management.base import CommandError

from core.forms import ReduceForm
from core.pauli import format_pauli
from core.reductions import (
    decide_mld,
    decide_mwsg,
    decide_sbp,
    format_sbp,
    load_mld_instance,
    mld_to_sbp,
    random_mld_instance,
    sbp_to_mwsg,
)

from ._base import MISMATCH, WeightCommand


class Command(WeightCommand):
    help = 'Run maximum-likelihood decoding instances through the chain to shortest-basis and MW-SG'
    form_class = ReduceForm

    def add_arguments(self, parser):
        parser.add_argument(
            '--instance',
            help='MLD instance file: rows of H, the syndrome, then the threshold'
        )
        parser.add_argument(
            '--random',
            type=int,
            help='Number of random instances to generate instead'
        )
        parser.add_argument(
            '--seed',
            type=int,
            default=0,
            help='Seed for the random instances (default: 0)'
        )
        parser.add_argument(
            '--m',
            type=int,
            default=3,
            help='Parity checks per random instance (default: 3)'
        )
        parser.add_argument(
            '--length',
            type=int,
            default=6,
            help='Code length of each random instance (default: 6)'
        )
        parser.add_argument(
            '--mode',
            choices=['check', 'transform'],
            default='check',
            help='"check" decides every stage, "transform" prints the reduced instances (default: check)'
        )

    def instances(self, config):
        if config['instance']:
            yield load_mld_instance(config['instance'])
            return
        rng = np.random.default_rng(config['seed'])
        for _ in range(config['random']):
            yield random_mld_instance(rng, config['m'], config['length'])

    def handle(self, *args, **options):
        config = self.validate(options)
        mismatches = 0
        for index, instance in enumerate(self.instances(config), start=1):
            sbp = mld_to_sbp(instance)
            mwsg = sbp_to_mwsg(sbp)

            if config['mode'] == 'transform':
                self.stdout.write(f'# instance {index}: shortest basis, threshold last')
                self.stdout.write(format_sbp(sbp))
                self.stdout.write(f'# instance {index}: stabilizer generators, threshold {mwsg.t}')
                for g in mwsg.generators:
                    self.stdout.write(format_pauli(g))
                continue

            verdicts = [decide_mld(instance), decide_sbp(sbp), decide_mwsg(mwsg)]
            line = f'instance {index}: MLD {verdicts[0].value}  SBP {verdicts[1].value}  MW-SG {verdicts[2].value}'
            if len(set(verdicts)) == 1:
                self.stdout.write(line)
            else:
                mismatches += 1
                self.stdout.write(self.style.ERROR(line))

        if mismatches:
            raise CommandError(f'{mismatches} instance(s) changed answer along the chain', returncode=MISMATCH)
