"""Request and response models for the counting service."""

from typing import Any

from pydantic import BaseModel, Field


class PartsRequest(BaseModel):
    parts: list[int] = Field(..., min_length=1, description="allowed parts; deduplicated and sorted")


class CountRequest(PartsRequest):
    n: int


class TableRequest(PartsRequest):
    n_max: int


class QuasipolyRequest(PartsRequest):
    extra_samples: int = 3


class VerifyRequest(PartsRequest):
    l_max: int = 3
    seed: int = 0


class AsymptoteRequest(PartsRequest):
    n_points: int = 8


class Envelope(BaseModel):
    """Uniform wrapper around every command's payload.

    Big integers and rationals travel as decimal / "p/q" strings so no client
    ever sees a rounded value; exact is the flag that promises it.
    """

    schema_version: str
    command: str
    input_echo: dict[str, Any]
    result: Any
    exact: bool
