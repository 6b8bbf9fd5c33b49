"""
Data schemas and structures
"""
import math
from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

BoundaryKind = Literal["periodic", "typeI", "typeII", "typeIII"]
JunctionKind = Literal["typeI", "typeII", "combined"]
Side = Literal["left", "right"]


class RuleParams(BaseModel):
    # Angle pair (rho, theta) of the homogeneous rule, radians
    model_config = ConfigDict(frozen=True)

    rho: float = Field(..., description="Advection coupling angle")
    theta: float = Field(..., description="Mass angle")

    @field_validator("rho", "theta")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("angle must be finite")
        return value


class BoundarySpec(BaseModel):
    # Boundary condition at one end of the lattice
    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: BoundaryKind = Field(..., description="Boundary family")
    upsilon: Optional[float] = Field(None, description="Phase angle used by typeI and typeIII")
    zeta: Optional[float] = Field(None, description="Phase angle used by typeII and typeIII")
    theta_prime: Optional[float] = Field(None, description="Boundary mass angle used by typeIII")
    side: Side = Field("left", description="Which end of the lattice")

    @property
    def upsilon_value(self) -> float:
        return self.upsilon if self.upsilon is not None else 0.0

    @property
    def zeta_value(self) -> float:
        return self.zeta if self.zeta is not None else 0.0


class SegmentSpec(BaseModel):
    # Inclusive run of sites sharing one rule
    model_config = ConfigDict(frozen=True, populate_by_name=True, extra="forbid")

    start: int = Field(..., alias="from", description="First site")
    end: int = Field(..., alias="to", description="Last site, inclusive")
    rho: float
    theta: float

    @property
    def params(self) -> RuleParams:
        return RuleParams(rho=self.rho, theta=self.theta)

    @property
    def length(self) -> int:
        return self.end - self.start + 1


class JunctionSpec(BaseModel):
    # Rule inhomogeneity; site is the last site of the segment on its left
    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: JunctionKind
    site: int


class BoundaryPair(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    left: BoundarySpec
    right: BoundarySpec


class RawLatticeConfig(BaseModel):
    # Structure of a config file before physics checks
    model_config = ConfigDict(extra="forbid")

    size: int = Field(..., description="Number of sites N")
    boundaries: BoundaryPair
    segments: List[SegmentSpec] = Field(..., min_length=1)
    junctions: List[JunctionSpec] = Field(default_factory=list)


class LatticeConfig(BaseModel):
    # Validated lattice description; build through lattice.validate_config
    model_config = ConfigDict(frozen=True)

    size: int
    periodic: bool
    left: Optional[BoundarySpec] = None
    right: Optional[BoundarySpec] = None
    segments: List[SegmentSpec]
    junctions: List[JunctionSpec] = Field(default_factory=list)


class PacketSpec(BaseModel):
    # Binomial wave packet
    model_config = ConfigDict(frozen=True)

    k0: float = Field(..., description="Carrier wavenumber")
    x0: int = Field(..., description="Center site")
    width: int = Field(..., ge=0, description="Even envelope width")
    epsilon: Literal[1, -1] = Field(1, description="Frequency branch")

    @field_validator("width")
    @classmethod
    def _even(cls, value: int) -> int:
        if value % 2:
            raise ValueError("packet width must be even")
        return value


class EmittedFile(BaseModel):
    path: str
    sha256: str
    size_bytes: int


class RunManifest(BaseModel):
    # Record of one CLI run
    subcommand: str
    config_path: Optional[str] = None
    out_dir: Optional[str] = None
    options: Dict[str, Union[int, float, str, bool, None, List[float]]] = Field(default_factory=dict)
    emitted: List[EmittedFile] = Field(default_factory=list)
