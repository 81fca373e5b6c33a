import io
import logging
import os
import sys


class StreamHandler(logging.StreamHandler):
    stream: io.StringIO

    def __init__(self, stream=None):
        if stream is None:
            stream = io.StringIO()
        super().__init__(stream)

    def reset(self):
        self.stream.close()
        stream = io.StringIO()
        self.setStream(stream)


class Logger(logging.Logger):
    """Logger that keeps a full DEBUG record in memory and prints a short one.

    The in-memory record is what `repro` attaches to failing checks.
    Console verbosity comes from the `CURVEGRAPH_LOG_LEVEL` environment variable.
    """

    def __init__(self, name, level=logging.NOTSET):
        super().__init__(name, level or logging.DEBUG)

        self.logger_handler = StreamHandler()
        logger_formatter = logging.Formatter(
            "%(name)s:%(filename)s:%(asctime)s:\n%(levelname)s:%(message)s"
        )
        self.logger_handler.setFormatter(logger_formatter)
        self.logger_handler.setLevel(logging.DEBUG)
        self.addHandler(self.logger_handler)

        self.console_handler = logging.StreamHandler(sys.stderr)
        logger_formatter_short = logging.Formatter("%(levelname)s:%(message)s")
        self.console_handler.setFormatter(logger_formatter_short)
        self.console_handler.setLevel(
            os.environ.get("CURVEGRAPH_LOG_LEVEL", "WARNING").upper()
        )
        self.addHandler(self.console_handler)

        self.propagate = False

    def reset(self):
        self.logger_handler.reset()

    def set_console_level(self, level):
        self.console_handler.setLevel(level)

    def getvalue(self):
        return self.logger_handler.stream.getvalue()


logger = Logger("Curvegraph")
