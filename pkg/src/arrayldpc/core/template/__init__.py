"""Template support matrices: inference, instantiation and JSON I/O."""

from arrayldpc.core.template.inference import TemplateInferrer, infer_template
from arrayldpc.core.template.instance import instantiate, is_admissible
from arrayldpc.core.template.io import (
    SHIPPED_SUPPORTS,
    dump_template,
    load_template,
    parse_template_json,
    shipped_support,
    shipped_template,
)
from arrayldpc.core.template.solver import simplest_crt_solution, solve_column_pair

__all__ = [
    "SHIPPED_SUPPORTS",
    "TemplateInferrer",
    "dump_template",
    "infer_template",
    "instantiate",
    "is_admissible",
    "load_template",
    "parse_template_json",
    "shipped_support",
    "shipped_template",
    "simplest_crt_solution",
    "solve_column_pair",
]
