"""
Configuration models and presets for weakid
"""

import json
from pathlib import Path
from typing import Literal, Union

from pydantic import BaseModel, Field, field_validator

from ..groups import GroupSpec


class RewriteConfig(BaseModel):
    """Normalization configuration"""
    step_budget: int = Field(default=200_000, ge=1, description="Maximum rewrite steps per normalization")
    check_steps: bool = Field(default=True, description="Verify evaluation and measure on every step while certifying")


class CertifyConfig(BaseModel):
    """Basis certification configuration"""
    degree_bound: int = Field(default=3, ge=1, le=6, description="Largest total degree certified")
    oracle_budget: int = Field(default=5, ge=1, description="Largest total degree the brute-force oracle accepts")
    raw_letter_degree: int = Field(
        default=2, ge=0, description="Total degree up to which raw group letters enter the spanning check"
    )
    workers: int = Field(default=1, ge=1, le=32, description="Worker processes for multidegrees")


class OutputConfig(BaseModel):
    """Report configuration"""
    format: Literal["text", "json"] = Field(default="text", description="Report format")
    seed: int = Field(default=0, description="Seed for randomized suites")
    conjugations: int = Field(default=0, ge=0, description="Random conjugating matrices for the conjugation suite, 0 disables")


class Config(BaseModel):
    """Main configuration model"""
    rewrite: RewriteConfig = Field(default_factory=RewriteConfig)
    certify: CertifyConfig = Field(default_factory=CertifyConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)

    @classmethod
    def for_group(cls, spec: GroupSpec) -> "Config":
        """Preset for a group; small cyclic groups certify one degree further"""
        config = cls()
        if spec.is_cyclic and spec.n <= 6:
            config.certify.degree_bound = 4
        return config

    @classmethod
    def from_json(cls, path: Union[str, Path]) -> "Config":
        with open(path, "r", encoding="utf-8") as f:
            return cls.model_validate(json.load(f))


class CliConfig(BaseModel):
    """Validated command-line arguments shared by the subcommands"""
    group: str
    degree: int = Field(default=3, ge=1, le=6)
    format: Literal["text", "json"] = "text"
    seed: int = 0
    step_budget: int = Field(default=200_000, ge=1)

    @field_validator("group")
    @classmethod
    def _parse_group(cls, value: str) -> str:
        return GroupSpec.parse(value).label

    @property
    def spec(self) -> GroupSpec:
        return GroupSpec.parse(self.group)
