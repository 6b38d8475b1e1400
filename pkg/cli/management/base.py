import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from django.utils.translation import gettext as _

from cli import choices

LOGGER = logging.getLogger(__name__)

USAGE_ERRORS = (ValueError, ArithmeticError, OSError)


class StateCommand(BaseCommand):
    """
    Shared flags and error mapping: usage errors exit with 2
    """

    requires_system_checks = []
    default_format = choices.FORMAT_TABLE

    def add_arguments(self, parser):
        parser.add_argument("--p", type=int, default=settings.FCS_DEFAULT_P)
        parser.add_argument("--depth", type=int, default=settings.FCS_DEFAULT_DEPTH)
        parser.add_argument(
            "--format",
            dest="output_format",
            choices=[name for name, label in choices.OUTPUT_FORMATS],
            default=self.default_format,
        )
        parser.add_argument("--out", help=_("Write to this path instead of stdout"))
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        ...

    def handle(self, *args, **options):
        if options["p"] < 2:
            raise CommandError(_("--p must be >= 2"), returncode=2)
        if options["depth"] < 0:
            raise CommandError(_("--depth must be >= 0"), returncode=2)
        try:
            text = self.run(**options)
        except CommandError:
            raise
        except USAGE_ERRORS as e:
            LOGGER.error("%s failed: %s", self.__module__, e)
            raise CommandError(str(e), returncode=2)
        self.emit(text, options.get("out"))

    def run(self, **options) -> str:
        raise NotImplementedError

    def emit(self, text, out=None):
        if out:
            with open(out, "w") as stream:
                stream.write(text)
            LOGGER.info("Wrote %s", out)
        else:
            self.stdout.write(text, ending="")
