from cli import controller
from cli.management.base import StateCommand
from fock.vector_format import format_vector


class Command(StateCommand):
    help = "Write the truncated Fock vector of a state"

    def add_command_arguments(self, parser):
        parser.add_argument("state")

    def run(self, p, depth, state, **options):
        return format_vector(controller.parse_state(state, p, depth).fock_vector())
