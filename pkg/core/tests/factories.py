import factory
from factory.random import randgen

from coherent.random_states import (
    random_cascade,
    random_constant,
    random_x_combination,
)
from coherent.states import DiskCoefficients, XCombination
from padic_fn.distributions import TestFunction
from words.word_lib import words_of_length


class DiskCoefficientsFactory(factory.Factory):
    p = 2
    depth = 3
    values = factory.LazyAttribute(
        lambda o: dict(random_cascade(o.p, o.depth, randgen).items())
    )

    class Meta:
        model = DiskCoefficients


class XCombinationFactory(factory.Factory):
    p = 2
    terms = factory.LazyAttribute(
        lambda o: dict(random_x_combination(o.p, o.max_length, randgen, o.size).items())
    )

    class Params:
        max_length = 2
        size = 3

    class Meta:
        model = XCombination


class LocallyConstantFunctionFactory(factory.Factory):
    p = 2
    level = 2
    values = factory.LazyAttribute(
        lambda o: {w: random_constant(randgen) for w in words_of_length(o.p, o.level)}
    )

    class Meta:
        model = TestFunction
