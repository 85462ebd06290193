import os
import logging

from dotenv import load_dotenv


class Singleton:
    """Class decorator giving lazy, process-wide single instances.

    The decorated class is reached through ``Instance()``; calling the
    decorator result directly is an error.
    """
    def __init__(self, cls):
        self._cls = cls

    def Instance(self):
        try:
            return self._instance
        except AttributeError:
            self._instance = self._cls()
            return self._instance

    def reset(self):
        """ Drop the instance so the next ``Instance()`` re-reads the environment """
        self.__dict__.pop("_instance", None)

    def __call__(self):
        raise TypeError('Singletons must be accessed through `Instance()`.')

    def __instancecheck__(self, inst):
        return isinstance(inst, self._cls)


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logging.getLogger(__name__).warning("ignoring non-integer %s=%r", name, raw)
        return default
    return value


@Singleton
class Globals(object):
    """Tunables shared by the whole package.

    Defaults can be overridden by ``ALPHAMETRIC_*`` environment variables,
    optionally provided through a ``.env`` file, and by CLI flags.
    """
    def __init__(self):
        load_dotenv()
        self._max_vertices = _env_int("ALPHAMETRIC_MAX_VERTICES", 20000)
        self._triangle_cap = _env_int("ALPHAMETRIC_TRIANGLE_CAP", 512)
        self._hull_cap = _env_int("ALPHAMETRIC_HULL_CAP", 50000)
        self._threads = max(1, _env_int("ALPHAMETRIC_THREADS", os.cpu_count() or 1))
        self._report_truncate = _env_int("ALPHAMETRIC_REPORT_TRUNCATE", 10000)
        self._log_level = os.environ.get("ALPHAMETRIC_LOG_LEVEL", "WARNING").upper()

    @property
    def max_vertices(self):
        """ Largest n for which a dense distance matrix is built """
        return self._max_vertices

    @max_vertices.setter
    def max_vertices(self, value):
        self._max_vertices = int(value)

    @property
    def triangle_cap(self):
        return self._triangle_cap

    @triangle_cap.setter
    def triangle_cap(self, value):
        self._triangle_cap = int(value)

    @property
    def hull_cap(self):
        return self._hull_cap

    @hull_cap.setter
    def hull_cap(self, value):
        self._hull_cap = int(value)

    @property
    def threads(self):
        return self._threads

    @threads.setter
    def threads(self, value):
        self._threads = max(1, int(value))

    @property
    def report_truncate(self):
        return self._report_truncate

    @report_truncate.setter
    def report_truncate(self, value):
        self._report_truncate = int(value)

    @property
    def log_level(self):
        return self._log_level

    @log_level.setter
    def log_level(self, value):
        self._log_level = str(value).upper()


globals = Globals.Instance()
