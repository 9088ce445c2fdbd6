import argparse

from django.core.management.base import BaseCommand

from cli.runner import run


class Command(BaseCommand):
    help = "Quantum boolean function laboratory: manage.py qbf <subcommand> [options]"

    def add_arguments(self, parser):
        parser.add_argument("argv", nargs=argparse.REMAINDER, help="Subcommand and its options")

    def handle(self, *args, **options):
        status = run(options["argv"], stdout=self.stdout, stderr=self.stderr)
        if status:
            raise SystemExit(status)
