"""Template JSON I/O and the packaged reference data."""

import logging
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from pydantic import ValidationError

from arrayldpc.core.interfaces import DataFormatError
from arrayldpc.core.support import parse_support_json
from arrayldpc.models.support import SupportMatrix
from arrayldpc.models.template import TemplateSupportMatrix

logger = logging.getLogger(__name__)

DATA_PACKAGE = "arrayldpc.data"

SHIPPED_SUPPORTS = {
    "q47_m6_w20": "Weight-20 codeword of C(47,6)",
    "q59_m6_w20": "Weight-20 codeword of C(59,6)",
    "q23_m7_w24": "Weight-24 codeword of C(23,7)",
    "q29_m7_w24": "Weight-24 codeword of C(29,7)",
    "q7_m6_w12": "Weight-12 codeword of C(7,6) from the reduced m=6 instance",
}


def dump_template(t: TemplateSupportMatrix, indent: Optional[int] = 2) -> str:
    """Template JSON: {"m", "w", "q0", "columns": [{"x": "-3/2", "y": "1"}, ...]}."""
    return t.model_dump_json(indent=indent)


def parse_template_json(text: str) -> TemplateSupportMatrix:
    try:
        return TemplateSupportMatrix.model_validate_json(text)
    except ValidationError as e:
        raise DataFormatError(f"invalid template JSON: {e}") from e


def load_template(path: Union[str, Path]) -> TemplateSupportMatrix:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DataFormatError(f"cannot read {path}: {e}") from e
    return parse_template_json(text)


def _read_data(*parts: str) -> str:
    node = resources.files(DATA_PACKAGE)
    for part in parts:
        node = node.joinpath(part)
    return node.read_text(encoding="utf-8")


def shipped_template(m: int) -> Optional[TemplateSupportMatrix]:
    """Packaged template for m (6 or 7), or None when none is shipped."""
    try:
        text = _read_data("templates", f"m{m}.json")
    except FileNotFoundError:
        return None
    logger.debug(f"Loaded shipped template for m={m}")
    return parse_template_json(text)


def shipped_support(name: str) -> SupportMatrix:
    """Packaged support matrix by name (see ``SHIPPED_SUPPORTS``)."""
    if name not in SHIPPED_SUPPORTS:
        raise DataFormatError(f"unknown shipped support {name!r}; choose from {sorted(SHIPPED_SUPPORTS)}")
    return parse_support_json(_read_data("supports", f"{name}.json"))
