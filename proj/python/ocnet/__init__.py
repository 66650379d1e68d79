"""One-counter net toolkit: trace inclusion, universality, reductions."""

from ocnet._core import (
    Machine,
    Net,
    ParseError,
    Reduction,
    bound_table,
    counting_gadget,
    decode_witness,
    fast_growing,
    fast_growing_omega,
    include,
    inclusion_oracle,
    machine_to_net,
    macro_step,
    normalize_pair,
    parse_machine,
    parse_net,
    rand_machine,
    rand_net,
    traces,
    universal,
    universality_oracle,
    weighted_inequality,
)

__all__ = [
    "Machine",
    "Net",
    "ParseError",
    "Reduction",
    "bound_table",
    "counting_gadget",
    "decode_witness",
    "fast_growing",
    "fast_growing_omega",
    "include",
    "inclusion_oracle",
    "machine_to_net",
    "macro_step",
    "normalize_pair",
    "parse_machine",
    "parse_net",
    "rand_machine",
    "rand_net",
    "traces",
    "universal",
    "universality_oracle",
    "weighted_inequality",
]
