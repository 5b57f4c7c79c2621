# This file makes the middleware directory a Python package
