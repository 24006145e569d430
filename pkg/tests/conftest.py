"""Shared fixtures: shipped supports and templates, and small codes."""

import pytest

from arrayldpc.core.code import build_code
from arrayldpc.core.template import shipped_support, shipped_template
from arrayldpc.models.code import ArrayCode
from arrayldpc.models.support import SupportMatrix
from arrayldpc.models.template import TemplateSupportMatrix


@pytest.fixture(scope="session")
def m6_template() -> TemplateSupportMatrix:
    t = shipped_template(6)
    assert t is not None
    return t


@pytest.fixture(scope="session")
def m7_template() -> TemplateSupportMatrix:
    t = shipped_template(7)
    assert t is not None
    return t


@pytest.fixture(scope="session")
def q47_support() -> SupportMatrix:
    return shipped_support("q47_m6_w20")


@pytest.fixture(scope="session")
def q59_support() -> SupportMatrix:
    return shipped_support("q59_m6_w20")


@pytest.fixture(scope="session")
def q7_support() -> SupportMatrix:
    return shipped_support("q7_m6_w12")


@pytest.fixture
def code_7_6() -> ArrayCode:
    return build_code(7, 6)


@pytest.fixture
def code_5_3() -> ArrayCode:
    return build_code(5, 3)
