# -*- coding: utf-8 -*-

"""Unit test package for sdf_hyperideal_step."""
