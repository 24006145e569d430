"""Rationals a/k evaluated modulo a prime."""

from fractions import Fraction
from typing import Any, Union

from pydantic import BaseModel, ConfigDict, Field, model_serializer, model_validator


class ModRational(BaseModel):
    """A reduced rational num/den whose residue mod q is num * den^-1.

    Accepts ``"-3/2"``, ``5``, ``Fraction(-3, 2)`` or ``{"num": -3, "den": 2}`` as input
    and always serializes to the text form (``"n"`` or ``"n/d"``).
    """

    model_config = ConfigDict(frozen=True)

    num: int
    den: int = Field(default=1, ge=1)

    @model_validator(mode="before")
    @classmethod
    def _coerce(cls, data: Any) -> Any:
        if isinstance(data, ModRational):
            return {"num": data.num, "den": data.den}
        if isinstance(data, bool):
            raise ValueError("booleans are not rationals")
        if isinstance(data, (int, Fraction)):
            value = Fraction(data)
        elif isinstance(data, str):
            try:
                value = Fraction(data.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise ValueError(f"invalid rational {data!r}") from e
        elif isinstance(data, dict):
            den = data.get("den", 1)
            if not isinstance(den, int) or den < 1:
                raise ValueError("den must be a positive integer")
            value = Fraction(data["num"], den)
        else:
            return data
        return {"num": value.numerator, "den": value.denominator}

    @model_serializer
    def _serialize(self) -> str:
        return str(self)

    @classmethod
    def parse(cls, value: Union[str, int, Fraction]) -> "ModRational":
        """Build a rational from its text form or a number."""
        return cls.model_validate(value)

    def as_fraction(self) -> Fraction:
        """Return the value as a ``fractions.Fraction``."""
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"ModRational({self})"
