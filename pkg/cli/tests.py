import csv
import io
import os
from fractions import Fraction
from tempfile import TemporaryDirectory
from unittest.mock import patch

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from cli import controller, exceptions
from coherent.file_format import read_disk_coefficients
from coherent.states import XCombination, fock_to_fcs
from fock.vector_format import read_vector
from iso import controller as iso_controller
from scalars.scalar_lib import ONE, constant
from words.word_lib import parse_word

GF_FILE = "2,2\n00 1\n10 -1/2\n01 i\n"
TEST_FUNCTION_FILE = "2,1\n0 2\n1 -1\n"


def run(*args, **options):
    stdout = io.StringIO()
    call_command(*args, stdout=stdout, **options)
    return stdout.getvalue()


class ParseStateTest(SimpleTestCase):
    def test_single_x_state(self):
        state = controller.parse_state("X:01", 2, 3)
        self.assertEqual(XCombination.x(parse_word("01", 2)), state.combination)
        self.assertEqual(3, state.coefficients.depth)

    def test_combination(self):
        state = controller.parse_state("1/2*X:0 + -i*X:11 + X:e", 2, 2)
        self.assertEqual(
            XCombination(
                2,
                {
                    parse_word("0", 2): constant(Fraction(1, 2)),
                    parse_word("11", 2): constant(0, -1),
                    parse_word("e", 2): ONE,
                },
            ),
            state.combination,
        )

    def test_parenthesized_coefficient(self):
        state = controller.parse_state("(1/2+i)*X:1", 3, 1)
        self.assertEqual(constant(Fraction(1, 2), 1), state.combination.coefficient(parse_word("1", 3)))

    def test_delta(self):
        state = controller.parse_state("delta:0110", 2, 4)
        self.assertIsNone(state.combination)
        self.assertEqual(ONE, state.coefficients[parse_word("011", 2)])

    def test_gf_file(self):
        with TemporaryDirectory() as tmpdirname:
            path = os.path.join(tmpdirname, "psi.txt")
            with open(path, "w") as fp:
                fp.write(GF_FILE)
            state = controller.parse_state("gf:" + path, 2, 5)
        self.assertEqual(2, state.coefficients.depth)
        self.assertEqual(constant(1, 1), state.coefficients[parse_word("0", 2)])

    def test_gf_file_with_other_p(self):
        with TemporaryDirectory() as tmpdirname:
            path = os.path.join(tmpdirname, "psi.txt")
            with open(path, "w") as fp:
                fp.write(GF_FILE)
            with self.assertRaises(exceptions.StateSpecError):
                controller.parse_state("gf:" + path, 3, 2)

    def test_unknown_kind(self):
        with self.assertRaises(exceptions.StateSpecError) as ctx:
            controller.parse_state("Y:01", 2, 2)
        self.assertEqual("Y:01", ctx.exception.spec)

    def test_missing_separator(self):
        with self.assertRaises(exceptions.StateSpecError):
            controller.parse_state("01", 2, 2)

    def test_delta_is_not_in_x_span(self):
        state = controller.parse_state("delta:01", 2, 2)
        with self.assertRaises(exceptions.NotInXSpanError):
            state.require_combination()


class ParseFlagsTest(SimpleTestCase):
    def test_lambda2(self):
        self.assertEqual(controller.parse_lambda2("3/2"), controller.parse_lambda2("1.5"))

    def test_lambda2_must_be_positive(self):
        with self.assertRaises(exceptions.LambdaLiteralError):
            controller.parse_lambda2("0")
        with self.assertRaises(exceptions.LambdaLiteralError):
            controller.parse_lambda2("1/0")

    def test_eps_grid(self):
        self.assertEqual([0.01, 0.005], controller.parse_eps_grid("0.01,0.005"))

    def test_eps_grid_bounds(self):
        for value in ("0", "1", "-0.1", "abc"):
            with self.assertRaises(exceptions.EpsGridError) as ctx:
                controller.parse_eps_grid("0.1," + value)
            self.assertEqual(value, ctx.exception.value)


class PairCommandTest(SimpleTestCase):
    def test_x_state_with_itself(self):
        self.assertEqual(
            "4\n"
            "t^0 1\n"
            "t^1 1\n"
            "t^2 1\n"
            "tail 1 * p^2 * sum_{k>2} (t/p)^k\n",
            run("pair", "X:01", "X:01", p=2, depth=5),
        )

    def test_delta_with_x_state(self):
        output = run("pair", "delta:01111", "X:0", p=2, depth=5)
        self.assertEqual("2", output.splitlines()[0])

    def test_disjoint_x_states(self):
        output = run("pair", "X:0", "X:1", p=3, depth=4)
        self.assertEqual("0", output.splitlines()[0])

    def test_gf_state(self):
        with TemporaryDirectory() as tmpdirname:
            path = os.path.join(tmpdirname, "psi.txt")
            with open(path, "w") as fp:
                fp.write(GF_FILE)
            output = run("pair", "gf:" + path, "X:0", p=2)
        self.assertEqual("2+2*i", output.splitlines()[0])

    def test_lambda2_below_threshold(self):
        lines = run("pair", "X:e", "X:e", p=2, depth=3, lambda2="1").splitlines()
        self.assertEqual("1", lines[0])
        # 1 + t/(p - t) at t=1
        self.assertEqual("value t=1 2", lines[-2])
        self.assertEqual("prelimit t=1 1.00000000000000e+00", lines[-1])

    def test_lambda2_at_threshold_is_a_usage_error(self):
        with self.assertRaises(CommandError) as ctx:
            run("pair", "X:0", "X:0", p=2, depth=3, lambda2="2")
        self.assertEqual(2, ctx.exception.returncode)

    def test_rhs_outside_x_span(self):
        with self.assertRaises(CommandError) as ctx:
            run("pair", "X:0", "delta:000", p=2, depth=3)
        self.assertEqual(2, ctx.exception.returncode)

    def test_bad_word(self):
        with self.assertRaises(CommandError) as ctx:
            run("pair", "X:02", "X:0", p=2, depth=3)
        self.assertEqual(2, ctx.exception.returncode)

    def test_invalid_p(self):
        with self.assertRaises(CommandError) as ctx:
            run("pair", "X:0", "X:0", p=1, depth=3)
        self.assertEqual(2, ctx.exception.returncode)

    def test_output_file(self):
        with TemporaryDirectory() as tmpdirname:
            path = os.path.join(tmpdirname, "pair.txt")
            self.assertEqual("", run("pair", "X:0", "X:0", p=2, depth=2, out=path))
            with open(path) as fp:
                self.assertEqual("2", fp.readline().strip())


class GramCommandTest(SimpleTestCase):
    def read_csv(self, output):
        rows = list(csv.reader(io.StringIO(output)))
        header, body = rows[0], rows[1:]
        matrices = {}
        for row in body:
            matrices.setdefault(row[0], []).append(row[2:])
        return header, matrices

    def test_p_2(self):
        header, matrices = self.read_csv(
            run("gram", "2", p=2, depth=5, output_format="csv")
        )
        self.assertEqual(["matrix", "I", "e", "0", "1", "00", "10", "01", "11"], header)
        fock = matrices["fock"]
        self.assertEqual(
            ["1", "2", "2", "4", "4", "4", "4"], [fock[k][k] for k in range(7)]
        )
        self.assertEqual(fock, matrices["l2"])
        self.assertTrue(all(value == "0" for row in matrices["difference"] for value in row))
        # X_01 against X_0
        self.assertEqual("2", fock[5][1])
        self.assertEqual("0", fock[3][4])

    def test_p_3(self):
        header, matrices = self.read_csv(
            run("gram", "1", p=3, depth=2, output_format="csv")
        )
        self.assertEqual(
            ["1", "3", "3", "3"], [matrices["fock"][k][k] for k in range(4)]
        )

    def test_table(self):
        output = run("gram", "1", p=2, depth=1)
        self.assertEqual(
            "# fock\n"
            "I\\J  e  0  1\n"
            "  e  1  1  1\n"
            "  0  1  2  0\n"
            "  1  1  0  2\n",
            output[: output.index("# l2")],
        )

    def test_max_len_deeper_than_depth(self):
        with self.assertRaises(CommandError) as ctx:
            run("gram", "3", p=2, depth=2)
        self.assertEqual(2, ctx.exception.returncode)


class ConvergenceCommandTest(SimpleTestCase):
    def test_error_is_linear_in_eps(self):
        output = run(
            "convergence", "X:01", "X:01", p=2, depth=4, eps_grid="0.01,0.005,0.0025"
        )
        rows = list(csv.DictReader(io.StringIO(output)))
        self.assertEqual(3, len(rows))
        self.assertEqual({"4.00000000000000e+00"}, {row["exact"] for row in rows})
        errors = [float(row["abs_error"]) for row in rows]
        for a, b in zip(errors, errors[1:]):
            self.assertGreaterEqual(b / a, 0.4)
            self.assertLessEqual(b / a, 0.6)

    def test_columns(self):
        output = run("convergence", "X:0", "X:0", p=2, depth=2, eps_grid="0.5")
        self.assertEqual("eps,lambda,prelimit,exact,abs_error", output.splitlines()[0])
        self.assertTrue(output.splitlines()[1].startswith("0.5,1.00000000000000e+00,"))

    @override_settings(FCS_DEFAULT_EPS_GRID=[0.1, 0.05])
    def test_default_grid_from_settings(self):
        output = run("convergence", "X:0", "X:1", p=2, depth=2)
        self.assertEqual(["0.1", "0.05"], [line.split(",")[0] for line in output.splitlines()[1:]])

    def test_eps_zero_is_rejected(self):
        with self.assertRaises(CommandError) as ctx:
            run("convergence", "X:0", "X:0", p=2, depth=2, eps_grid="0.01,0")
        self.assertEqual(2, ctx.exception.returncode)

    def test_same_output_twice(self):
        first = run("convergence", "delta:0101", "X:01", p=2, depth=4, eps_grid="0.01")
        self.assertEqual(first, run("convergence", "delta:0101", "X:01", p=2, depth=4, eps_grid="0.01"))


class VerifyCommandTest(SimpleTestCase):
    def test_all_passes(self):
        output = run("verify", "all", p=2, depth=5, seed=7)
        self.assertTrue(output.startswith("# suite=all p=2 depth=5 seed=7\n"))
        self.assertTrue(output.splitlines()[-1].startswith("# PASS"))

    def test_example6_for_p_5(self):
        output = run("verify", "example6", p=5, depth=3)
        self.assertNotIn("FAIL", output)

    def test_threshold_reports_both_parameters(self):
        output = run("verify", "threshold", p=2)
        self.assertIn("t=2 ", output)
        self.assertIn("t=5/2 ", output)

    def test_unknown_suite(self):
        with self.assertRaises(CommandError) as ctx:
            run("verify", "nosuch", p=2, depth=2)
        self.assertEqual(2, ctx.exception.returncode)

    def test_failure_exits_with_1(self):
        def broken(report, p, depth, rng):
            report.check("one = zero", "case", ONE, constant(0))

        stdout = io.StringIO()
        with patch.dict(iso_controller.SUITES, {"cascade": broken}):
            with self.assertRaises(CommandError) as ctx:
                call_command("verify", "cascade", p=2, depth=2, stdout=stdout)
        self.assertEqual(1, ctx.exception.returncode)
        self.assertIn("FAIL cascade one = zero case: 1 == 0", stdout.getvalue())

    def test_depth_zero_is_a_usage_error(self):
        for suite in ("ccr", "example6", "all"):
            with self.subTest(suite=suite):
                with self.assertRaises(CommandError) as ctx:
                    run("verify", suite, p=2, depth=0)
                self.assertEqual(2, ctx.exception.returncode)

    @override_settings(FCS_SUITE_STATES=1, FCS_SUITE_MAX_LENGTH=1)
    def test_suite_sizes_follow_settings(self):
        output = run("verify", "intertwine", p=2, depth=3)
        self.assertNotIn("X:00", output)
        self.assertNotIn("cascade1", output)
        self.assertIn("Psi=X:1 ", output)


class BuildStateCommandTest(SimpleTestCase):
    def test_x_state(self):
        self.assertEqual(
            "p=2 depth=2 guarantee=2\ne 1\n0 L\n00 (L^2)/(2)\n01 (L^2)/(2)\n",
            run("build_state", "X:0", p=2, depth=2),
        )

    def test_delta_state_has_one_word_per_level(self):
        lines = run("build_state", "delta:011", p=2, depth=3).splitlines()
        self.assertEqual(["e", "0", "01", "011"], [line.split()[0] for line in lines[1:]])

    def test_gf_state_round_trips_through_the_vector_file(self):
        with TemporaryDirectory() as tmpdirname:
            path = os.path.join(tmpdirname, "psi.txt")
            with open(path, "w") as fp:
                fp.write(GF_FILE)
            output = run("build_state", "gf:" + path, p=2)
        self.assertTrue(output.startswith("p=2 depth=2 "))
        self.assertEqual(
            read_disk_coefficients(io.StringIO(GF_FILE)),
            fock_to_fcs(read_vector(io.StringIO(output))),
        )


class GfPairCommandTest(SimpleTestCase):
    def test_pairs_file_state_with_file_function(self):
        with TemporaryDirectory() as tmpdirname:
            psi = os.path.join(tmpdirname, "psi.txt")
            f = os.path.join(tmpdirname, "f.txt")
            with open(psi, "w") as fp:
                fp.write(GF_FILE)
            with open(f, "w") as fp:
                fp.write(TEST_FUNCTION_FILE)
            self.assertEqual("5/2+2*i\n", run("gfpair", "gf:" + psi, f, p=2))

    def test_delta_evaluates(self):
        with TemporaryDirectory() as tmpdirname:
            f = os.path.join(tmpdirname, "f.txt")
            with open(f, "w") as fp:
                fp.write(TEST_FUNCTION_FILE)
            self.assertEqual("-1\n", run("gfpair", "delta:10", f, p=2, depth=2))

    def test_missing_file(self):
        with self.assertRaises(CommandError) as ctx:
            run("gfpair", "X:0", "/nonexistent/f.txt", p=2, depth=2)
        self.assertEqual(2, ctx.exception.returncode)
