"""
Verification reports: one line per checked identity with both exact values.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, List, Tuple

from coherent.states import DiskCoefficients, XCombination
from fock.fock_lib import FockVector
from padic_fn.distributions import TestFunction
from scalars.scalar_lib import Constant, Scalar, render_constant, render_scalar
from words.word_lib import Word, format_word

from .choices import FAIL, PASS

LOGGER = logging.getLogger(__name__)


def _render_map(items, render):
    return "{" + ", ".join(
        "{}: {}".format(format_word(w), render(value)) for w, value in items
    ) + "}"


def render_value(value: Any) -> str:
    if isinstance(value, Constant):
        return render_constant(value)
    if isinstance(value, Scalar):
        return render_scalar(value)
    if isinstance(value, FockVector):
        return _render_map(
            ((w, value.coefficient(w)) for w in value.support()), render_scalar
        )
    if isinstance(value, (DiskCoefficients, TestFunction)):
        return _render_map(sorted(value.items(), key=lambda item: item[0].digits), render_constant)
    if isinstance(value, XCombination):
        return repr(value)
    if isinstance(value, Word):
        return format_word(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(render_value(v) for v in value) + "]"
    return str(value)


@dataclass
class CheckResult:
    suite: str
    identity: str
    case: str
    lhs: Any
    rhs: Any
    order: Tuple = ()

    @property
    def passed(self):
        return self.lhs == self.rhs

    def render(self):
        return "{} {} {} {}: {} == {}".format(
            PASS if self.passed else FAIL,
            self.suite,
            self.identity,
            self.case,
            render_value(self.lhs),
            render_value(self.rhs),
        )


@dataclass
class VerificationReport:
    suite: str
    p: int
    depth: int
    seed: int
    results: List[CheckResult] = field(default_factory=list)

    def check(self, identity, case, lhs, rhs, order=()):
        result = CheckResult(self.suite, identity, case, lhs, rhs, tuple(order))
        if not result.passed:
            LOGGER.error("%s", result.render())
        self.results.append(result)
        return result.passed

    def extend(self, other: "VerificationReport"):
        self.results.extend(other.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    @property
    def passed(self):
        return not self.failures

    def sorted_results(self) -> List[CheckResult]:
        return sorted(self.results, key=lambda r: (r.suite, r.identity, r.order, r.case))

    def render(self) -> str:
        lines = [
            "# suite={} p={} depth={} seed={}".format(
                self.suite, self.p, self.depth, self.seed
            )
        ]
        lines.extend(r.render() for r in self.sorted_results())
        lines.append(
            "# {} {} checks, {} failed".format(
                PASS if self.passed else FAIL, len(self.results), len(self.failures)
            )
        )
        return "\n".join(lines) + "\n"
