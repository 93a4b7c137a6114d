"""
Shared plumbing for the loopgrass management commands.

Every command reads one or more JSON payloads (a file path or inline JSON),
turns each into a report dict and writes the reports as sorted JSON or as
``key: value`` text. Domain and validation failures exit with code 1.
"""

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from arith.exceptions import LoopgrassError

logger = logging.getLogger(__name__)


def read_payload(source):
    """Inline JSON when ``source`` starts with { or [, otherwise a path."""
    text = source.strip()
    if not text.startswith(('{', '[')):
        path = Path(source)
        if not path.is_file():
            raise CommandError(f"no such payload file: {source}", returncode=2)
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CommandError(f"payload is not valid JSON: {exc}", returncode=1)


def emit_json(report):
    return json.dumps(report, sort_keys=True, ensure_ascii=False)


def emit_text(report):
    if not isinstance(report, dict):
        return emit_json(report)
    lines = []
    for key in sorted(report):
        value = report[key]
        rendered = value if isinstance(value, str) else json.dumps(value, sort_keys=True, ensure_ascii=False)
        lines.append(f"{key}: {rendered}")
    return "\n".join(lines)


def validation_message(detail):
    return json.dumps(detail, sort_keys=True, ensure_ascii=False)


class ReportCommand(BaseCommand):
    """A command that prints one report; subclasses implement ``report``."""

    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument(
            '--format',
            choices=('json', 'text'),
            default='json',
            help='Output format (default: json)',
        )

    def handle(self, *args, **options):
        try:
            result = self.build(options)
        except serializers.ValidationError as exc:
            raise CommandError(validation_message(exc.detail), returncode=1)
        except LoopgrassError as exc:
            raise CommandError(f"{type(exc).__name__}: {exc}", returncode=1)
        self.stdout.write(self.render(result, options['format']))

    def build(self, options):
        return self.report(options)

    def report(self, options):
        raise NotImplementedError('subclasses of ReportCommand must provide a report() method')

    def render(self, result, output_format):
        if output_format == 'text':
            return self.as_text(result)
        return emit_json(result)

    def as_text(self, result):
        if isinstance(result, list):
            return "\n\n".join(self.as_text(item) for item in result)
        return emit_text(result)


class PayloadCommand(ReportCommand):
    """Runs ``process`` on each payload; ``--jobs`` spreads them over threads.

    With more than one payload the reports come back as a list in input order.
    """

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('payloads', nargs='+', help='JSON file paths or inline JSON')
        parser.add_argument(
            '--jobs',
            type=int,
            default=settings.LOOPGRASS_JOBS,
            help='Worker threads for several payloads (default: LOOPGRASS_JOBS)',
        )

    def build(self, options):
        payloads = [read_payload(source) for source in options['payloads']]
        jobs = max(1, options['jobs'])

        def run(payload):
            try:
                return self.process(payload, options)
            except (CommandError, LoopgrassError, serializers.ValidationError):
                raise
            except Exception:
                logger.exception(f"{self.__module__} failed on a payload")
                raise

        if len(payloads) == 1:
            return run(payloads[0])
        logger.debug(f"{len(payloads)} payloads on {jobs} workers")
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run, payloads))

    def process(self, payload, options):
        raise NotImplementedError('subclasses of PayloadCommand must provide a process() method')
