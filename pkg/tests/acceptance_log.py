"""Collects one pass/fail line per acceptance criterion."""
import functools
import time

RESULTS: dict[int, tuple[bool, str, str]] = {}


def criterion(n: int, title: str):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            t = time.perf_counter()
            try:
                detail = fn(*args, **kwargs) or ""
            except BaseException as e:
                RESULTS[n] = (False, title, f"{type(e).__name__}: {str(e).splitlines()[0] if str(e) else ''}")
                raise
            RESULTS[n] = (True, title, f"{detail}; {time.perf_counter() - t:.2f}s".lstrip("; "))

        return run

    return wrap
