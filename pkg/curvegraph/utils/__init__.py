from . import file_read  # noqa
from . import title_parsing  # noqa
from .random_utils import *  # noqa
