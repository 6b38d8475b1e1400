import io

from cli import controller
from cli.management.base import StateCommand


class Command(StateCommand):
    help = "Gram matrices of the X_I, |I| <= max_len, on the Fock and L2 sides"

    def add_command_arguments(self, parser):
        parser.add_argument("max_len", type=int)

    def run(self, p, depth, max_len, output_format, **options):
        matrices = controller.gram_matrices(p, depth, max_len)
        stream = io.StringIO()
        controller.write_gram(
            stream, controller.gram_basis(p, max_len), matrices, output_format
        )
        return stream.getvalue()
