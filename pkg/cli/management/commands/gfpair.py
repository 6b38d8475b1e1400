from cli import controller
from cli.management.base import StateCommand
from scalars.scalar_lib import render_constant


class Command(StateCommand):
    help = "Pair the generalized function phi'(Psi) with a test function file"

    def add_command_arguments(self, parser):
        parser.add_argument("state")
        parser.add_argument("test_function", help="file with header p,level")

    def run(self, p, depth, state, test_function, **options):
        value = controller.gf_pair_value(controller.parse_state(state, p, depth), test_function)
        return render_constant(value) + "\n"
