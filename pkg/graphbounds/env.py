# coding: utf-8

"""Project environment: directories, configuration and cached graph streams."""

import copy
from datetime import datetime
import json
import logging
import os
from os.path import join as pjoin

from boltons.fileutils import mkdir_p

from graphbounds import logconf  # pylint: disable=unused-import
from graphbounds import enumeration
from graphbounds.graph import read_graph6_file, write_graph6_file

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name

HOME_VARIABLE = 'GRAPHBOUNDS_HOME'
CONFIG_FILE = 'config.json'
SUBDIRS = ('data', 'results', 'log')

DEFAULT_CONFIG = {
    'workers': None,
    'chunk_size': 500,
    'search': {
        'max_iterations': 10000,
        'restarts': 5,
        'max_neighborhood_k': 5,
        'patience': 20,
    },
}


def add_project_handler(log_file):
    """
    Send everything the package loggers emit to ``log_file`` as well.

    Returns:
        logging.FileHandler: The new handler, so it can be detached later.
    """
    handler = logging.FileHandler(log_file, mode='w')
    handler.setFormatter(
        logging.Formatter(logconf.CONFIG['formatters']['default']['format']))
    for name in logconf.CONFIG['loggers']:
        logging.getLogger(name).addHandler(handler)
    return handler


def merge_config(defaults, overrides):
    """Recursively overlay ``overrides`` on a copy of ``defaults``."""
    merged = copy.deepcopy(defaults)
    for key, value in overrides.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = merge_config(merged[key], value)
        else:
            merged[key] = value
    return merged


def _home(env_path):
    if env_path:
        return os.path.abspath(env_path)
    if os.getenv(HOME_VARIABLE):
        return os.path.abspath(os.getenv(HOME_VARIABLE))
    return pjoin(os.path.expanduser('~'), 'graphbounds_data')


class WorkbenchEnv(object):
    """
    Home directory and one project inside it.

    The project directory ``<home>/<name>`` gets ``data`` (cached graph6
    streams), ``results`` and ``log`` subdirectories; each instance writes a
    fresh timestamped log file under ``log``. Call :meth:`close` when done.

    Parameters:
        name (str): Project directory name.
        env_path (str): Home directory. Falls back to ``$GRAPHBOUNDS_HOME``,
            then to ``~/graphbounds_data``.
    """
    def __init__(self, name='default', env_path=None):
        self._name = name
        self._env_path = _home(env_path)
        self._project_path = pjoin(self._env_path, name)
        self._paths = {}
        for sub in SUBDIRS:
            self._paths[sub] = pjoin(self._project_path, sub)
            mkdir_p(self._paths[sub])

        stamp = datetime.now().strftime('%Y%m%dT%H%M%S')
        self._log_file = pjoin(self._paths['log'], stamp + '.log')
        self._handler = add_project_handler(self._log_file)
        logger.info('Project %s in %s', name, self._project_path)

        # Loaded lazily by get_config.
        self.config = None

    @property
    def name(self):
        return self._name

    @property
    def env_path(self):
        """Home directory holding all projects and ``config.json``."""
        return self._env_path

    @property
    def project_path(self):
        return self._project_path

    @property
    def log_file(self):
        """Log file of this run."""
        return self._log_file

    @property
    def data_path(self):
        return self._paths['data']

    @property
    def results_path(self):
        return self._paths['results']

    def __repr__(self):
        return 'WorkbenchEnv({0!r}, {1!r})'.format(self._name, self._env_path)

    def __str__(self):
        return 'WorkbenchEnv({0})'.format(self._name)

    def close(self):
        """Detach this project's log file from the loggers."""
        for name in logconf.CONFIG['loggers']:
            logging.getLogger(name).removeHandler(self._handler)
        self._handler.close()

    def config_path(self, filename=None):
        """Absolute path of a configuration file, relative to the home."""
        return pjoin(self._env_path, filename or CONFIG_FILE)

    def read_config(self, filename=None):
        """
        Parameters:
            filename (str): JSON file in the home directory; defaults to
                ``config.json``.

        Returns:
            dict: The parsed file.
        """
        path = self.config_path(filename)
        with open(path, 'r') as config_file:
            config = json.load(config_file)
        logger.debug('Loaded configuration from %s', path)
        return config

    def write_config(self, config, filename=None):
        """Replace a configuration file with ``config``."""
        path = self.config_path(filename)
        with open(path, 'w') as config_file:
            json.dump(config, config_file, indent=2, sort_keys=True)
        logger.debug('Wrote configuration to %s', path)

    def get_config(self):
        """
        :data:`DEFAULT_CONFIG` overlaid with ``config.json`` from the home
        directory, if there is one. Cached in :attr:`config`.
        """
        if self.config is None:
            user = {}
            if os.path.exists(self.config_path()):
                user = self.read_config()
            self.config = merge_config(DEFAULT_CONFIG, user)
        return self.config

    def stream_path(self, kind, n):
        """Path of the cached graph6 stream of ``kind`` on ``n`` vertices."""
        return pjoin(self.data_path, '{0}_n{1}.g6'.format(kind, n))

    def load_stream(self, kind, n):
        """
        Graphs of a stream, read from the project cache when present and
        enumerated and cached otherwise.

        Returns:
            list: :class:`graphbounds.graph.Graph` objects in certificate
            order.
        """
        enumeration.check_stream(kind, n)
        path = self.stream_path(kind, n)
        if os.path.exists(path):
            logger.info('Reading cached stream %s', path)
            return list(read_graph6_file(path))
        graphs = list(enumeration.stream(kind, n))
        count = write_graph6_file(graphs, path)
        logger.info('Cached %i graphs in %s', count, path)
        return graphs
