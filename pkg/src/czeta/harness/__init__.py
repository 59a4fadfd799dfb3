from .serialize import (
    case_from_json,
    case_to_json,
    residual_report_from_json,
    residual_report_to_json,
    value_from_json,
    value_to_json,
)
from .suite import (
    RandomBlock,
    SuiteReport,
    SuiteSpec,
    generate_cases,
    load_spec,
    report_from_json,
    report_to_json,
    run_spec,
    run_suite,
    spec_from_dict,
)
from .cli import cli_main, main

__all__ = [
    "value_to_json",
    "value_from_json",
    "case_to_json",
    "case_from_json",
    "residual_report_to_json",
    "residual_report_from_json",
    "RandomBlock",
    "SuiteSpec",
    "SuiteReport",
    "spec_from_dict",
    "load_spec",
    "generate_cases",
    "run_suite",
    "run_spec",
    "report_to_json",
    "report_from_json",
    "cli_main",
    "main",
]
