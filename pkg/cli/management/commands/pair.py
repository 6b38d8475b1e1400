from cli import controller
from cli.management.base import StateCommand


class Command(StateCommand):
    help = "Exact renormalized pairing (Psi, Phi) and its series in t = L^2"

    def add_command_arguments(self, parser):
        parser.add_argument("lhs", help="Psi: X:, delta: or gf: state")
        parser.add_argument("rhs", help="Phi: X state or combination of X states")
        parser.add_argument("--lambda2", help="also evaluate at t = lambda2, as num/den")

    def run(self, p, depth, lhs, rhs, lambda2=None, **options):
        lambda2 = controller.parse_lambda2(lambda2) if lambda2 else None
        lines = controller.pair_lines(
            controller.parse_state(lhs, p, depth),
            controller.parse_state(rhs, p, depth),
            lambda2,
        )
        return "\n".join(lines) + "\n"
