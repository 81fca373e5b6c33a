# flake8: noqa: F401
from .attrdict_class import AttrDict, jsonable
