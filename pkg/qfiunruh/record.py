import abc
from typing import Optional, Callable, ClassVar, Literal, Dict, List, Union
import logging
import json
import os

import numpy as np
import pandas as pd

from .errors import QfiUnruhError
from .physics import FieldModel


def check_error(fn: Callable) -> Callable:
    """Prevents operation if the record is containing an error

    :param fn: method that should not to be executed in case of error
    :return: wrapper function
    """
    def wrapper(*args, **kwargs):
        """Wrapper function
        """
        rec = args[0]
        if rec.error is False and rec.data is not None:
            rec = fn(*args, **kwargs)
        else:
            logging.error(f'{repr(rec)}: due to error to the record, process "{fn.__name__}" skipped.')
        return rec

    wrapper.__doc__ = fn.__doc__
    wrapper.__name__ = fn.__name__

    return wrapper


class Record(metaclass=abc.ABCMeta):
    """
    This class is representing computed datasets like scans, F_max curves or
    estimation reports. It contains common methods to all datasets.

    The data is computed lazily the first time the :attr:`data` property is
    read. Errors raised during the computation are logged and stored in the
    `error` and `error_msg` attributes instead of being propagated.

    :cvar records_folder: folder where :meth:`save` archives the datasets
    :cvar kind: name of the dataset kind, used for file names
    :ivar field: :class:`qfiunruh.physics.FieldModel` of the dataset
    :ivar error: True if the computation failed
    :ivar error_msg: message of the error
    """
    records_folder: ClassVar[str] = 'records'
    kind: ClassVar[str] = 'record'

    # Printed precision of floats, enough to re-parse every double exactly
    float_format: ClassVar[str] = '%.17g'

    @abc.abstractmethod
    def __init__(self,
                 field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC,
                 data: Optional[Union['JsonData', pd.DataFrame]] = None) -> None:
        """Abstract constructor, all datasets have at least a field model.
        """
        self.error = False
        self.error_msg = None
        self.field = FieldModel.parse(field)
        self._data = data

    @abc.abstractmethod
    def _compute_data(self) -> Optional[Union['JsonData', pd.DataFrame]]:
        """Abstract method. This method is different according to the type of dataset"""
        return None

    @property
    @abc.abstractmethod
    def label(self) -> str:
        """Short identifier of the dataset used in file names"""
        return ''

    @property
    def data(self) -> Optional[Union[Dict, List, pd.DataFrame]]:
        """Property computing the data when it is not available yet

        :return: pandas DataFrame or json content
        """
        if self._data is None and self.error is False:
            try:
                self.data = self._compute_data()
            except QfiUnruhError as err:
                self._handle_error(str(err))

        if self._data is not None:
            if type(self._data) is pd.DataFrame:
                return self._data
            else:
                return self._data.content

    @data.setter
    def data(self, data: Union['JsonData', pd.DataFrame]) -> None:
        """Property used to set data
        :param data: pandas DataFrame or :class:`qfiunruh.record.JsonData`
        :return: None
        """
        self._data = data

    def to_csv(self) -> str:
        """Return the data as csv text

        Header row, one row per data point, 17 significant digits, LF line endings.

        :return: csv string
        """
        if self.data is None:
            return ''
        if type(self._data) is pd.DataFrame:
            frame = self._data
        else:
            content = self._data.content
            frame = pd.DataFrame(content if isinstance(content, list) else [content])
        return frame.to_csv(index=False, float_format=self.float_format, lineterminator='\n')

    def to_json(self) -> str:
        """Return the data as json text

        DataFrames are exported as a list of flat objects, one per row.

        :return: json string
        """
        if self.data is None:
            return ''
        if type(self._data) is pd.DataFrame:
            return str(JsonData(frame_to_records(self._data))) + '\n'
        return str(self._data) + '\n'

    def __str__(self) -> str:
        """Return content of data attribute as a string
        :return: string data
        """
        if type(self.data) is pd.DataFrame:
            return self.to_csv()
        elif self.data is not None:
            return self.to_json()
        else:
            return ''

    def __bytes__(self):
        """Return content of data attribute as bytes
        :return: bytes data
        """
        return str(self).encode('utf-8')

    def _render(self, data_format: Literal['csv', 'json']) -> str:
        """Return the text of the data in the requested format"""
        return self.to_csv() if data_format == 'csv' else self.to_json()

    def _save_from_path(self, filepath: str, data_format: Literal['csv', 'json'] = 'csv') -> str:
        """Save a dataset in the 'records' folder. Versioning is supported. A suffix is added to the file path.

        :param filepath: initial path of the saved dataset
        :param data_format: "csv" or "json"
        :return: final path of the file
        """
        # Fetch directory
        directory = os.path.dirname(filepath)

        # Create the directory if it doesn't exist
        os.makedirs(directory, exist_ok=True)

        # Add a suffix _xx to the file name before extension
        filename = os.path.basename(filepath)
        base_filename, extension = filename.rsplit('.', 1)
        files = os.listdir(directory)
        version = str(len([f for f in files if base_filename in f]) + 1).zfill(2)

        # Build the final path
        final_path = os.path.join(directory, f'{base_filename}_{version}.{extension}')

        with open(final_path, 'w', newline='\n') as f:
            f.write(self._render(data_format))

        logging.info(f'{repr(self)}: dataset saved: {final_path}')
        return final_path

    @check_error
    def save(self, data_format: Literal['csv', 'json'] = 'csv') -> 'Record':
        """save(data_format: Literal['csv', 'json'] = 'csv') -> 'Record'
        Save the dataset in the 'records' folder

        When saved, a suffix is added to the file path with the version.
        Example: records/<kind>/<kind>_<label>_<version>.csv

        :param data_format: "csv" or "json"
        :return: the record itself

        .. note::
            If the record encountered an error, this
            method will be skipped.
        """
        filepath = f'{self.records_folder}/{self.kind}/{self.kind}_{self.label}.{data_format}'
        self._save_from_path(filepath, data_format)
        return self

    @check_error
    def write(self, path: str, data_format: Literal['csv', 'json'] = 'csv') -> 'Record':
        """write(path: str, data_format: Literal['csv', 'json'] = 'csv') -> 'Record'
        Write the dataset to the exact path, without versioning

        :param path: destination file
        :param data_format: "csv" or "json"
        :return: the record itself
        :raise: OSError when the file cannot be written

        .. note::
            If the record encountered an error, this
            method will be skipped.
        """
        with open(path, 'w', newline='\n') as f:
            f.write(self._render(data_format))
        logging.info(f'{repr(self)}: dataset written: {path}')
        return self

    def _handle_error(self, msg: str) -> None:
        """Set the record error attribute to True and write the logs about the error

        :param msg: message of the error
        :return: None
        """
        logging.error(f'{repr(self)}: {msg}')
        self.error = True
        self.error_msg = msg


def frame_to_records(frame: pd.DataFrame) -> List[Dict]:
    """Convert a DataFrame into a list of flat dicts with native python values

    :param frame: pandas DataFrame
    :return: list of dicts, one per row
    """
    return [{key: _native(value) for key, value in row.items()} for row in frame.to_dict(orient='records')]


def _native(value):
    """Convert numpy scalars to python scalars for json serialisation"""
    if isinstance(value, np.generic):
        return value.item()
    return value


class JsonData:
    """Simple class representing json data

    :ivar content: json content of the object

    :Example:

    >>> from qfiunruh.record import JsonData
    >>> data = JsonData(filepath='path_to_some_json_file')
    >>> print(data)

    Will pretty print the json content.
    """
    def __init__(self, content: Optional[Union[Dict, List]] = None, filepath: Optional[str] = None):
        """JsonData object constructor"""
        self.content = content
        if filepath is not None:
            self.content = self._read_file(filepath)

    def __str__(self):
        return json.dumps(self.content, indent=2, default=_native)

    def __bytes__(self):
        data_str = json.dumps(self.content, default=_native)
        return bytes(data_str, 'utf-8')

    @staticmethod
    def _read_file(filepath: str) -> Optional[Union[Dict, List]]:
        """Read json data file from disk

        :param filepath: path to the data file
        :return: json data
        """
        try:
            f = open(filepath, 'rb')
        except FileNotFoundError:
            logging.error(f'File not found: {filepath}')
            return

        try:
            data = json.load(f)
            logging.info(f'Json data file read: {filepath}')
        except ValueError:
            logging.error(f'Failed to read json: {filepath}')
            data = None
        finally:
            f.close()

        return data


if __name__ == "__main__":
    pass
