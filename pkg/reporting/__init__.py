"""
Report emitters and chart export
"""

from .emitters import Report, emit, to_jsonable
from .charts import CountsChart

__all__ = ["Report", "emit", "to_jsonable", "CountsChart"]
