from datetime import datetime as dt
import functools
from typing import Callable, Any

from ribbon_morph.internal.presentation.interfaces import ILogger


def enriched_logger(logger: ILogger, class_name: str):
    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(args, *rest, **kwargs) -> Any:
            method_name = func.__name__
            call = f"{class_name}.{method_name}"

            context = {
                "call": call,
                "command": getattr(args, "command", None),
            }
            if getattr(args, "config", None):
                context["config"] = str(args.config)

            start = dt.now()

            try:
                result = func(args, *rest, **kwargs)
                logger.info(
                    "success",
                    **context,
                    duration=f"{(dt.now() - start).total_seconds() * 1000:.0f}ms"
                )
                return result
            except Exception as e:
                logger.warn(
                    f"error: {e}",
                    **context,
                    error_type=type(e).__name__,
                    duration=f"{(dt.now() - start).total_seconds() * 1000:.0f}ms"
                )
                raise

        return wrapper

    return decorator
