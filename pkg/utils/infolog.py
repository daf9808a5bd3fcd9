from time import perf_counter as timer
from datetime import datetime
import atexit

_format = "%Y-%m-%d %H:%M:%S.%f"
_rule = "-" * 65
_file = None
_run_name = None
_start = None


def init(filename, run_name):
    """
    Starts the log of a run. Messages passed to log() are then also appended to filename, each
    line stamped with the wall clock and the time elapsed since init.
    """
    global _file, _run_name, _start
    _close_logfile()
    _file = open(filename, "a")
    _run_name = run_name
    _start = timer()
    _banner("Starting a new %s run" % run_name)


def log(msg, end="\n"):
    print(msg, end=end)
    if _file is None:
        return
    stamp = "[%s +%8.3fs]" % (datetime.now().strftime(_format)[:-3], timer() - _start)
    for line in str(msg).splitlines() or [""]:
        _file.write("%s  %s\n" % (stamp, line))
    _file.flush()


def close():
    if _file is not None:
        _banner("Finished the %s run after %.3fs" % (_run_name, timer() - _start))
    _close_logfile()


def _banner(text):
    _file.write("\n%s\n%s\n%s\n" % (_rule, text, _rule))
    _file.flush()


def _close_logfile():
    global _file
    if _file is not None:
        _file.close()
        _file = None


atexit.register(_close_logfile)
