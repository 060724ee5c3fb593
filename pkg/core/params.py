"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │           PARAMETERS                │
 *  └─────────────────────────────────────┘
 *  Validated radio, election and simulation parameters
 *
 *  Pydantic models for every tunable value of a run, plus the
 *  flat key = value config file loader.
 *
 *  Parameters:
 *  - None
 *
 *  Returns:
 *  - RadioParams, ElectionParams, SimConfig, load_config
 *
 *  Notes:
 *  - Defaults come from config.py
 *  - Models are immutable once validated
 *  - Errors always name the offending key
 */
"""

import math
import os
from typing import Any, Dict, Mapping, Optional

from dotenv import dotenv_values
from pydantic import BaseModel, ValidationError, root_validator, validator

import config
from core.models import Protocol


class ConfigError(ValueError):
    """Configuration problem tied to a single key"""

    def __init__(self, key: str, reason: str):
        self.key = key
        self.reason = reason
        super().__init__(f"{key}: {reason}")


class RadioParams(BaseModel):
    """
     ┌─────────────────────────────────────┐
     │          RADIOPARAMS                │
     └─────────────────────────────────────┘
     First-order radio model coefficients

     All fields strictly positive.
    """
    e_elec: float = config.E_ELEC
    eps_fs: float = config.EPS_FS
    eps_mp: float = config.EPS_MP
    e_da: float = config.E_DA
    d0: float = config.D0
    message_bits: int = config.MESSAGE_BITS
    initial_energy: float = config.INITIAL_ENERGY

    class Config:
        allow_mutation = False
        extra = "forbid"

    @validator("*")
    def must_be_positive(cls, value):
        if not value > 0:
            raise ValueError("must be > 0")
        return value


class ElectionParams(BaseModel):
    """
     ┌─────────────────────────────────────┐
     │         ELECTIONPARAMS              │
     └─────────────────────────────────────┘
     Cluster-head election parameters

     p drives the epoch length floor(1/p); p_opt1/p_opt2 are the
     near/far region probabilities and c the near-region weight.
    """
    p: float = config.P
    p_opt1: float = config.P_OPT1
    p_opt2: float = config.P_OPT2
    c: float = config.C
    variant: Protocol = Protocol.LEACH

    class Config:
        allow_mutation = False
        extra = "forbid"

    @validator("p", "p_opt1", "p_opt2")
    def must_be_probability(cls, value):
        if not 0.0 < value < 1.0:
            raise ValueError("must be in (0, 1)")
        return value

    @validator("c")
    def must_be_positive(cls, value):
        if not value > 0:
            raise ValueError("must be > 0")
        return value

    @property
    def epoch_length(self) -> int:
        """Rounds per epoch, floor(1/p)"""
        return max(1, int(math.floor(1.0 / self.p + 1e-9)))


class SimConfig(BaseModel):
    """
     ┌─────────────────────────────────────┐
     │           SIMCONFIG                 │
     └─────────────────────────────────────┘
     Effective configuration of one simulation run

     Notes:
     - election.variant always equals protocol
     - to_config_text() output reloads to an identical model
    """
    num_nodes: int = config.NUM_NODES
    region_side: float = config.REGION_SIDE
    bs_offset: float = config.BS_OFFSET
    protocol: Protocol = Protocol(config.PROTOCOL)
    max_rounds: int = config.MAX_ROUNDS
    seed: int = config.SEED
    radio: RadioParams = RadioParams()
    election: ElectionParams = ElectionParams()

    class Config:
        allow_mutation = False
        extra = "forbid"

    @validator("num_nodes", "max_rounds")
    def must_be_positive_count(cls, value):
        if value < 1:
            raise ValueError("must be >= 1")
        return value

    @validator("region_side")
    def must_be_positive_length(cls, value):
        if not value > 0:
            raise ValueError("must be > 0")
        return value

    @validator("bs_offset")
    def must_be_non_negative(cls, value):
        if value < 0:
            raise ValueError("must be >= 0")
        return value

    @validator("seed")
    def must_be_valid_seed(cls, value):
        if value < 0:
            raise ValueError("must be >= 0")
        return value

    @root_validator(skip_on_failure=True)
    def sync_variant(cls, values):
        election = values.get("election")
        protocol = values.get("protocol")
        if election is not None and protocol is not None and election.variant != protocol:
            values["election"] = election.copy(update={"variant": protocol})
        return values

    def with_updates(self, **updates: Any) -> 'SimConfig':
        """Return a re-validated copy with flat-key updates applied"""
        flat = self.to_flat()
        flat.update(updates)
        return SimConfig.from_flat(flat)

    def to_flat(self) -> Dict[str, Any]:
        """Flatten to the config-file key space"""
        flat: Dict[str, Any] = {
            "num_nodes": self.num_nodes,
            "region_side": self.region_side,
            "bs_offset": self.bs_offset,
            "protocol": self.protocol,
            "max_rounds": self.max_rounds,
            "seed": self.seed,
        }
        flat.update(self.radio.dict())
        flat.update(self.election.dict(exclude={"variant"}))
        return flat

    @classmethod
    def from_flat(cls, flat: Mapping[str, Any]) -> 'SimConfig':
        """Build from config-file keys; raises ConfigError naming the failing key"""
        top: Dict[str, Any] = {}
        radio: Dict[str, Any] = {}
        election: Dict[str, Any] = {}
        for key, value in flat.items():
            if key in RADIO_KEYS:
                radio[key] = value
            elif key in ELECTION_KEYS:
                election[key] = value
            elif key in NETWORK_KEYS:
                top[key] = value
            else:
                raise ConfigError(key, "unknown key")
        try:
            return cls(radio=RadioParams(**radio), election=ElectionParams(**election), **top)
        except ValidationError as e:
            error = e.errors()[0]
            key = str(error["loc"][-1]) if error.get("loc") else "config"
            raise ConfigError(key, error.get("msg", "invalid value")) from e

    def to_config_text(self) -> str:
        """Serialize as a flat key = value config file"""
        lines = []
        for key in CONFIG_KEYS:
            value = self.to_flat()[key]
            if isinstance(value, Protocol):
                value = value.value
            elif isinstance(value, float):
                value = repr(value)
            lines.append(f"{key} = {value}")
        return "\n".join(lines) + "\n"


NETWORK_KEYS = ("num_nodes", "region_side", "bs_offset", "protocol", "max_rounds", "seed")
RADIO_KEYS = ("e_elec", "eps_fs", "eps_mp", "e_da", "d0", "message_bits", "initial_energy")
ELECTION_KEYS = ("p", "p_opt1", "p_opt2", "c")
CONFIG_KEYS = NETWORK_KEYS + RADIO_KEYS + ELECTION_KEYS

INT_KEYS = {"num_nodes", "max_rounds", "seed", "message_bits"}


def parse_value(key: str, raw: Any) -> Any:
    """
     ┌─────────────────────────────────────┐
     │          PARSE_VALUE                │
     └─────────────────────────────────────┘
     Convert a raw config value to the key's type

     Parameters:
     - key: config key
     - raw: string from a file/flag, or an already typed value

     Returns:
     - int, float or Protocol

     Notes:
     - Raises ConfigError for unknown keys and unparsable values
    """
    if key not in CONFIG_KEYS:
        raise ConfigError(key, "unknown key")
    if raw is None or (isinstance(raw, str) and not raw.strip()):
        raise ConfigError(key, "missing value")
    try:
        if key == "protocol":
            return Protocol.parse(raw)
        if key in INT_KEYS:
            if isinstance(raw, str):
                number = float(raw.strip())
                if not number.is_integer():
                    raise ValueError(raw)
                return int(number)
            return int(raw)
        return float(raw.strip()) if isinstance(raw, str) else float(raw)
    except (TypeError, ValueError) as e:
        raise ConfigError(key, f"cannot parse value {raw!r}") from e


def load_config(path: Optional[str] = None,
                overrides: Optional[Mapping[str, Any]] = None) -> SimConfig:
    """
     ┌─────────────────────────────────────┐
     │          LOAD_CONFIG                │
     └─────────────────────────────────────┘
     Load the effective simulation config

     Parameters:
     - path: optional flat key = value file
     - overrides: optional key -> value mapping (command-line flags)

     Returns:
     - Validated SimConfig

     Notes:
     - Precedence: defaults < file < overrides
     - Unspecified keys keep their defaults
    """
    flat: Dict[str, Any] = {}

    if path is not None:
        if not os.path.isfile(path):
            raise ConfigError("config", f"file not found: {path}")
        for key, raw in dotenv_values(path, interpolate=False).items():
            flat[key] = parse_value(key, raw)

    for key, raw in (overrides or {}).items():
        if raw is None:
            continue
        flat[key] = parse_value(key, raw)

    return SimConfig.from_flat(flat)
