"""
Monitoring and observability configuration.

Provides Prometheus metrics for verification checks and structured logging
for the command line tool.
"""

from prometheus_client import Counter, Histogram, Gauge, REGISTRY, generate_latest, write_to_textfile
import sys
import time
from functools import wraps
from typing import Callable, Optional
import logging
from pythonjsonlogger import jsonlogger


# Prometheus Metrics
CHECKS_TOTAL = Counter(
    'design_spectra_checks_total',
    'Total number of verification checks run',
    ['check', 'result']
)

CHECK_DURATION_SECONDS = Histogram(
    'design_spectra_check_duration_seconds',
    'Verification check duration in seconds',
    ['check'],
    buckets=(0.001, 0.005, 0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 10.0, 30.0)
)

MATRIX_SIZE = Gauge(
    'design_spectra_matrix_size',
    'Dimensions of the most recently verified matrices',
    ['kind', 'dimension']
)

PLAIN_FORMAT = '%(asctime)s %(name)s %(levelname)s %(message)s'


def configure_logging(level: str = 'WARNING', json_output: bool = True) -> logging.Logger:
    """
    Configure the root logger with a single stderr handler.

    Args:
        level: Log level name, e.g. "INFO"
        json_output: Emit JSON lines via python-json-logger instead of plain text

    Returns:
        The root logger
    """
    log_handler = logging.StreamHandler(sys.stderr)
    if json_output:
        formatter: logging.Formatter = jsonlogger.JsonFormatter(PLAIN_FORMAT, timestamp=True)
    else:
        formatter = logging.Formatter(PLAIN_FORMAT)
    log_handler.setFormatter(formatter)

    log_level = getattr(logging, level.upper(), logging.WARNING)

    logging.root.handlers = []
    logging.root.addHandler(log_handler)
    logging.root.setLevel(log_level)

    return logging.root


def track_check(name: str) -> Callable[[Callable], Callable]:
    """
    Decorator to track a check function's result and timing.

    The wrapped function returns a truthy value on success. A tuple result is
    judged by its first element, so checks may return (passed, witness).

    Args:
        name: Check label used in the metrics

    Returns:
        Decorator producing the wrapped function
    """
    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.time()

            try:
                outcome = func(*args, **kwargs)
            except Exception:
                CHECK_DURATION_SECONDS.labels(check=name).observe(time.time() - start_time)
                CHECKS_TOTAL.labels(check=name, result='error').inc()
                raise

            CHECK_DURATION_SECONDS.labels(check=name).observe(time.time() - start_time)
            passed = outcome[0] if isinstance(outcome, tuple) else outcome
            CHECKS_TOTAL.labels(check=name, result='pass' if passed else 'fail').inc()
            return outcome

        return wrapper

    return decorator


def record_matrix(kind: str, rows: int, cols: int) -> None:
    """Publish the shape of a matrix under verification."""
    MATRIX_SIZE.labels(kind=kind, dimension='rows').set(rows)
    MATRIX_SIZE.labels(kind=kind, dimension='cols').set(cols)


def write_metrics(path: Optional[str]) -> None:
    """
    Write the default registry in Prometheus text format.

    Args:
        path: Destination file; nothing is written when None
    """
    if path:
        write_to_textfile(path, REGISTRY)


def get_metrics() -> bytes:
    """
    Generate Prometheus metrics in exposition format.

    Returns:
        Metrics text as bytes
    """
    return generate_latest()
