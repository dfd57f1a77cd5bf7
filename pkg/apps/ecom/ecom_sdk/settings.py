"""
Shared Settings (Singleton Pattern)
===================================
Loads config.yml once and hands out budgets to the rest of the SDK.

Precedence: built-in defaults < config.yml < --config file < ECOM_BUDGET_MB < CLI flags.
"""

import contextvars
import logging
import os
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional

import yaml

from ecom_sdk.errors import BudgetExceeded

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).parent / "config.yml"


@dataclass(frozen=True)
class Budget:
    """Resource limits for one command."""
    max_group_order: int = 4096
    associativity_check_limit: int = 512
    max_abelian_subgroups: int = 250000
    max_simplices: int = 5000000
    max_cosets: int = 1000000
    time_limit_seconds: float = 600.0
    memory_mb: int = 4096

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @contextmanager
    def active(self) -> Iterator["BudgetClock"]:
        """Make this budget the one seen by checkpoint() and reserve()."""
        clock = BudgetClock(self)
        token = _ACTIVE.set(clock)
        try:
            yield clock
        finally:
            _ACTIVE.reset(token)


@dataclass
class BudgetClock:
    """A running budget: the limits plus the moment they started counting."""
    budget: Budget
    started: float = field(default_factory=time.monotonic)

    def elapsed(self) -> float:
        return time.monotonic() - self.started


_ACTIVE: contextvars.ContextVar[Optional[BudgetClock]] = contextvars.ContextVar("ecom_budget", default=None)


def current_budget() -> Budget:
    clock = _ACTIVE.get()
    return clock.budget if clock else SharedSettings.get().budget


def checkpoint(stage: str) -> None:
    """Raise BudgetExceeded when the active budget's wall clock ran out."""
    clock = _ACTIVE.get()
    if clock is None:
        return
    elapsed = clock.elapsed()
    if elapsed > clock.budget.time_limit_seconds:
        raise BudgetExceeded("time_limit_seconds", clock.budget.time_limit_seconds, round(elapsed, 3), partial=stage)


def reserve(resource: str, count: int, bytes_each: int = 64) -> None:
    """
    Check a count limit and the memory estimate before materialising data.

    Args:
        resource: budget field holding the count limit ("max_simplices", "max_cosets")
        count: number of items about to be materialised
        bytes_each: rough per-item footprint used for the memory estimate
    """
    budget = current_budget()
    limit = getattr(budget, resource)
    if count > limit:
        raise BudgetExceeded(resource, limit, count)
    estimate_mb = count * bytes_each / (1024 * 1024)
    if estimate_mb > budget.memory_mb:
        raise BudgetExceeded("memory_mb", budget.memory_mb, round(estimate_mb, 1))


@dataclass(frozen=True)
class Settings:
    """Everything read from config.yml."""
    budget: Budget = field(default_factory=Budget)
    primes: List[int] = field(default_factory=lambda: [2147483647, 1000000007])
    tietze_rounds: int = 64
    tietze_max_pair_checks: int = 200000
    tietze_max_relator_length: int = 24
    seed: int = 42
    samples: int = 1000
    stretch_seconds: float = 600.0

    def with_budget(self, **overrides: Any) -> "Settings":
        """Copy with budget fields replaced; None values are ignored."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        if not changes:
            return self
        return replace(self, budget=replace(self.budget, **changes))


def _settings_from_mapping(config: Dict[str, Any], base: Settings) -> Settings:
    budgets = config.get("budgets", {}) or {}
    unknown = set(budgets) - set(Budget.__dataclass_fields__)
    if unknown:
        logger.warning("Ignoring unknown budget keys: %s", ", ".join(sorted(unknown)))
    budget = replace(base.budget, **{k: v for k, v in budgets.items() if k in Budget.__dataclass_fields__})
    homology = config.get("homology", {}) or {}
    tietze = config.get("tietze", {}) or {}
    verification = config.get("verification", {}) or {}
    return Settings(
        budget=budget,
        primes=list(homology.get("primes", base.primes)),
        tietze_rounds=int(tietze.get("rounds", base.tietze_rounds)),
        tietze_max_pair_checks=int(tietze.get("max_pair_checks", base.tietze_max_pair_checks)),
        tietze_max_relator_length=int(tietze.get("max_relator_length", base.tietze_max_relator_length)),
        seed=int(verification.get("seed", base.seed)),
        samples=int(verification.get("samples", base.samples)),
        stretch_seconds=float(verification.get("stretch_seconds", base.stretch_seconds)),
    )


def load_settings(config_path: Optional[str] = None) -> Settings:
    """
    Build Settings from the packaged config.yml and an optional override file.

    Args:
        config_path: extra YAML file layered over the packaged defaults

    Returns:
        Settings with ECOM_BUDGET_MB applied
    """
    settings = Settings()
    for path in (DEFAULT_CONFIG_PATH, Path(config_path) if config_path else None):
        if path is None:
            continue
        if not path.exists():
            if path != DEFAULT_CONFIG_PATH:
                raise FileNotFoundError(f"config file not found: {path}")
            logger.debug("Packaged config.yml missing; using built-in defaults")
            continue
        with open(path, "r", encoding="utf-8") as f:
            settings = _settings_from_mapping(yaml.safe_load(f) or {}, settings)

    env_mb = os.environ.get("ECOM_BUDGET_MB")
    if env_mb:
        try:
            settings = settings.with_budget(memory_mb=int(env_mb))
        except ValueError:
            logger.warning("ECOM_BUDGET_MB=%r is not an integer; ignored", env_mb)
    return settings


class SharedSettings:
    """Process-wide settings, loaded once."""

    _instance: Optional[Settings] = None

    @classmethod
    def get(cls) -> Settings:
        if cls._instance is None:
            cls._instance = load_settings()
        return cls._instance

    @classmethod
    def configure(cls, settings: Settings) -> None:
        cls._instance = settings

    @classmethod
    def reset(cls) -> None:
        """Forget the loaded settings (for testing)."""
        cls._instance = None
