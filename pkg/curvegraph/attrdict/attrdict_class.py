"""This module contains the AttrDict class, the base of every report."""

import json
from typing import Any, List, Optional

import numpy as np

from ..utils import title_parsing as utils_parse


def jsonable(value: Any) -> Any:
    """Convert report values to plain JSON types.

    Objects that know how to serialise themselves provide `as_json()`.
    """
    if hasattr(value, "as_json"):
        return value.as_json()
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


class AttrDict(dict):
    """A dictionary that allows to access its keys as attributes.

    Examples:
        >>> report = AttrDict({'ntc_total': 6.28, 'name': 'square'})
        >>> report['ntc_total'] # -> 6.28
        >>> report.ntc_total # -> 6.28

    """

    def __init__(self, *args, **kwargs):
        """Use the same constructor as classical dictionary."""
        super().__init__(*args, **kwargs)
        for k, v in self.items():
            if isinstance(v, dict) and not isinstance(v, AttrDict):
                self[k] = AttrDict(v)
        self.__dict__ = self

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}: {super().__repr__()}"

    def output(self, keys: List[str], max_length: Optional[int] = None) -> str:
        """Output the given keys with provided format.

        Use the structure `key__unit__format` for each key. The format `pi`
        prints an exact multiple of pi symbolically.

        Examples:
        ----------
            >>> data = AttrDict({'ntc_total': 9.42477796076938})
            >>> data.output(["ntc_total"]) # -> 'ntc_total = 9.42477796076938'
            >>> data.output(["ntc_total__rad__.3f"]) # -> 'ntc_total = 9.425 (rad)'
            >>> data.output(["ntc_total__pi"]) # -> 'ntc_total = 3*pi'
        """
        keys_with_values = self.__get_value_for_output(keys)
        return utils_parse.format_title(keys_with_values, max_length=max_length)

    def to_json(self, indent: Optional[int] = 2) -> str:
        """Serialise with sorted keys so equal reports give identical text."""
        return json.dumps(jsonable(self), indent=indent, sort_keys=True)

    def __get_value_for_output(
        self, keys: List[str]
    ) -> List[utils_parse.ValueForPrint]:
        """Prepare the values for output. Returns list of ValueForPrint(key, value, unit, format))."""
        keys_with_values = []
        for key in keys:
            key_value, key_units, key_format = utils_parse.parse_get_format(key)
            if key_value in self:
                keys_with_values.append(
                    utils_parse.ValueForPrint(
                        key_value, self[key_value], key_units, key_format
                    )
                )
            else:
                raise ValueError(
                    f"Cannot find key={key} inside {self.__class__.__name__}"
                )
        return keys_with_values
