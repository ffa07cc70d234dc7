from .report import CaseReport, count_distributions, parse_distribution_spec, render_text, run_case

__all__ = ["CaseReport", "count_distributions", "parse_distribution_spec", "render_text",
           "run_case"]
