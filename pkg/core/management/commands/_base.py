"""Shared plumbing for the weight-bound management commands."""
import json
import sys
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from core.conf import budget
from core.exceptions import QWeightError

USAGE = 1
BUDGET = 2
MISMATCH = 3


class WeightCommand(BaseCommand):
    """Validates options through a form and maps library errors onto exit codes."""

    form_class = None

    def add_jobs_argument(self, parser):
        parser.add_argument(
            '--jobs',
            type=int,
            default=None,
            help=f"Worker processes (default: {budget('JOBS')})"
        )

    def add_output_arguments(self, parser, formats=('text', 'json'), default='text'):
        parser.add_argument(
            '--format',
            choices=formats,
            default=default,
            help=f'Output format (default: {default})'
        )
        parser.add_argument(
            '--output',
            help='Write the result to this file instead of standard output'
        )

    def validate(self, options):
        """Cleaned form data for the options, or a usage error"""
        form = self.form_class(data={key: value for key, value in options.items() if value is not None})
        if not form.is_valid():
            messages = []
            for field, errors in form.errors.items():
                prefix = '' if field == '__all__' else f'--{field.replace("_", "-")}: '
                messages.extend(prefix + str(e) for e in errors)
            raise CommandError('; '.join(messages), returncode=USAGE)
        return form.cleaned_data

    def progress(self, message):
        self.stderr.write(message)

    def emit(self, text, output=None):
        if output:
            Path(output).write_text(text if text.endswith('\n') else text + '\n')
            self.stderr.write(self.style.SUCCESS(f'Wrote {output}'))
        else:
            self.stdout.write(text.rstrip('\n'))

    def emit_json(self, data, output=None):
        self.emit(json.dumps(data, indent=2), output)

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except QWeightError as exc:
            raise CommandError(str(exc), returncode=exc.exit_code) from exc
        except (OSError, ValueError) as exc:
            raise CommandError(str(exc), returncode=USAGE) from exc


def jobs_option(value):
    return value if value is not None else budget('JOBS')


def read_text(path):
    """File contents, with ``-`` meaning standard input"""
    if path == '-':
        return sys.stdin.read()
    return Path(path).read_text()
