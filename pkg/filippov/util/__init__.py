from . import config, error, misc, text, time
