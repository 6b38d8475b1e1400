import io

from django.conf import settings

from cli import choices, controller
from cli.management.base import StateCommand


class Command(StateCommand):
    help = "Prelimit (1 - t/p) <Phi, Psi> at t = p (1 - eps) against the exact limit"
    default_format = choices.FORMAT_CSV

    def add_command_arguments(self, parser):
        parser.add_argument("lhs")
        parser.add_argument("rhs")
        parser.add_argument(
            "--eps-grid",
            dest="eps_grid",
            default=",".join(str(eps) for eps in settings.FCS_DEFAULT_EPS_GRID),
        )

    def run(self, p, depth, lhs, rhs, eps_grid, output_format, **options):
        rows = controller.convergence_rows(
            controller.parse_state(lhs, p, depth),
            controller.parse_state(rhs, p, depth),
            controller.parse_eps_grid(eps_grid),
        )
        stream = io.StringIO()
        controller.write_convergence(stream, rows, output_format)
        return stream.getvalue()
