from .configlog import config_log
from .runconfig import RunConfig
from .version import __version__
