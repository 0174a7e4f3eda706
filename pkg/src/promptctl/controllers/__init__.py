"""Interchangeable discrete-time controllers over named error vectors."""

from .base import Controller
from .fuzzy import STANDARD_RULES, FuzzyController, FuzzyRulebase, fuzzy_step
from .leadlag import LeadLagController, LeadLagParams, lead_lag_step
from .lqr import LqrController, LqrParams, lqr_cost, lqr_gain, lqr_step
from .pid import PidController, PidGains, PidState, SessionMode, pid_step
from .tuning import DynamicPlant, relay_autotune, ziegler_nichols_gains

__all__ = [
    "Controller",
    "DynamicPlant",
    "FuzzyController",
    "FuzzyRulebase",
    "LeadLagController",
    "LeadLagParams",
    "LqrController",
    "LqrParams",
    "PidController",
    "PidGains",
    "PidState",
    "SessionMode",
    "STANDARD_RULES",
    "fuzzy_step",
    "lead_lag_step",
    "lqr_cost",
    "lqr_gain",
    "lqr_step",
    "pid_step",
    "relay_autotune",
    "ziegler_nichols_gains",
]
