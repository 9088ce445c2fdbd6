import numpy as np
from json_log_formatter import JSONFormatter


def _plain(value):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    return value


class StandardJSONLogFormatter(JSONFormatter):
    """JSON lines on stderr; a ``report`` extra is reduced to its command and seed."""

    def json_record(self, message, extra, record):
        report = extra.pop("report", None)
        if report:
            extra["command"] = getattr(report, "command", None)
            extra["seed"] = getattr(report, "seed", None)
        extra = {key: _plain(value) for key, value in extra.items()}
        additional_info = {
            "name": record.name,
            "level": record.levelname,
            "file": record.filename,
            "exc_info": self.formatException(record.exc_info) if record.exc_info else None,
            "thread": record.thread,
        }
        extra = {**extra, **additional_info}
        return super().json_record(message, extra, record)
