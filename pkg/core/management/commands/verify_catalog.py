from django.core.management.base import CommandError

from core.catalog import Status, load_catalog, verify, verify_all
from core.models import VerificationRecord

from ._base import MISMATCH, WeightCommand, jobs_option


class Command(WeightCommand):
    help = 'Rebuild every catalog entry and check its [[n,k,d;w]] label'

    def add_arguments(self, parser):
        parser.add_argument(
            '--catalog',
            help='Catalog document (default: the shipped one)'
        )
        parser.add_argument(
            '--no-checksum',
            action='store_true',
            help='Skip the sha256 check of the shipped catalog'
        )
        parser.add_argument(
            '--label',
            action='append',
            help='Only verify these labels, e.g. "[[5,1,3;4]]" (repeatable)'
        )
        self.add_jobs_argument(parser)
        self.add_output_arguments(parser)
        parser.add_argument(
            '--save',
            action='store_true',
            help='Store one verification record per entry'
        )

    def handle(self, *args, **options):
        catalog = load_catalog(options['catalog'], verify_checksum=not options['no_checksum'])
        if options['label']:
            reports = [verify(catalog[label], catalog) for label in options['label']]
        else:
            reports = verify_all(catalog, jobs=jobs_option(options['jobs']), progress=self.progress)

        if options['save']:
            VerificationRecord.objects.bulk_create(
                VerificationRecord.from_report(report, catalog[report.label].expr) for report in reports
            )

        if options['format'] == 'json':
            self.emit_json([report.as_dict() for report in reports], options['output'])
        else:
            lines = []
            for report in reports:
                text = f'{report.label}: {report.status.value}'
                if report.mismatches:
                    text += ' (' + ', '.join(report.mismatches) + ')'
                if report.message:
                    text += f' - {report.message}'
                if report.status is Status.MISMATCH:
                    text = self.style.ERROR(text)
                elif report.status is not Status.VERIFIED:
                    text = self.style.WARNING(text)
                lines.append(text)
            self.emit('\n'.join(lines), options['output'])

        failed = [r for r in reports if r.status is Status.MISMATCH]
        if failed:
            raise CommandError(f'{len(failed)} of {len(reports)} entries do not match their labels', returncode=MISMATCH)
        self.stderr.write(self.style.SUCCESS(f'{len(reports)} entries checked'))
