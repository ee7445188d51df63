# -*- coding: utf8 -*-

def get_version():
    version = {}

    import numpy
    import scipy
    import sympy
    from fermbezzle import settings

    version['fermbezzle'] = settings.VERSION
    version['numpy'] = numpy.__version__
    version['scipy'] = scipy.__version__
    version['sympy'] = sympy.__version__
    return version

def get_version_string(newlines=False):
    version = get_version()
    result = []
    result.append(u"fermbezzle %s" % version['fermbezzle'])
    libs = ["NumPy %s" % version['numpy'], "SciPy %s" % version['scipy'],
        "SymPy %s" % version['sympy']]
    result.append(u"using %s" % ", ".join(libs))
    return ("\n" if newlines else " ").join(result)
