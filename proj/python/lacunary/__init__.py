"""Identity testing for lacunary shifted-power expressions.

Thin convenience layer over the compiled core. Bignums cross the boundary
as decimal strings; expressions as JSON documents.
"""

import json as _json

from ._lacunary import (
    GuardError,
    algebraic_height,
    expand,
    gap_delta,
    hitset,
    prime_count_bound,
    projective_height,
    real_root_count,
    refute,
    zero_test,
)

__all__ = [
    "GuardError",
    "algebraic_height",
    "expand",
    "expand_dict",
    "expression",
    "gap_delta",
    "hitset",
    "prime_count_bound",
    "projective_height",
    "real_root_count",
    "refute",
    "refute_dict",
    "zero_test",
    "zero_test_dict",
]


def expression(a, b, terms):
    """Build an expression document from (a, b) and (c, alpha, beta) triples."""
    return _json.dumps(
        {
            "a": str(a),
            "b": str(b),
            "terms": [
                {"c": str(c), "alpha": str(alpha), "beta": str(beta)}
                for c, alpha, beta in terms
            ],
        }
    )


def zero_test_dict(expression_json, mode="structural"):
    return _json.loads(zero_test(expression_json, mode))


def expand_dict(expression_json):
    return _json.loads(expand(expression_json))


def refute_dict(expression_json, targets, extra_primes=3):
    return _json.loads(refute(expression_json, list(targets), extra_primes))
