from django.conf import settings
from django.core.management.base import CommandError
from django.utils.translation import gettext as _

from cli.management.base import StateCommand
from iso.controller import run_suite


class Command(StateCommand):
    help = "Run a verification suite; exits with 1 when a check fails"

    def add_command_arguments(self, parser):
        parser.add_argument("suite")
        parser.add_argument("--seed", type=int, default=settings.FCS_DEFAULT_SEED)

    def run(self, suite, p, depth, seed, **options):
        self.report = run_suite(suite, p, depth, seed)
        return self.report.render()

    def emit(self, text, out=None):
        super().emit(text, out)
        if not self.report.passed:
            raise CommandError(
                _("{} of {} checks failed").format(
                    len(self.report.failures), len(self.report.results)
                ),
                returncode=1,
            )
