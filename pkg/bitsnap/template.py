# Copyright 2024 Confluent Inc.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import inspect
import os.path

from jinja2 import ChoiceLoader, Environment, FileSystemLoader, PackageLoader, Template

from bitsnap.utils.util import package_is_installed


class TemplateRenderer(object):
    """Mixin rendering jinja2 text reports with the object's attributes as context.

    Template files for a class live in a ``templates`` directory next to the module defining it.
    """

    def _get_ctx(self):
        ctx = {k: getattr(self.__class__, k) for k in dir(self.__class__) if not k.startswith("__")}
        ctx.update(self.__dict__)
        return ctx

    def render_template(self, template, **kwargs) -> str:
        """
        :param template: a Template or a template string
        :param kwargs: values overriding the object's own attributes
        """
        if not hasattr(template, 'render'):
            template = Template(template, trim_blocks=True, lstrip_blocks=True)
        return template.render(self._get_ctx(), **kwargs)

    @staticmethod
    def _package_search_path(module_name):
        """Split ``a.b.c`` into the top package ``a`` and the package-relative path ``b/templates``."""
        module_parts = module_name.split(".")
        return module_parts[0], os.path.join(*(module_parts[1:-1] + ["templates"]))

    def _environment(self) -> Environment:
        if not hasattr(self, '_template_env'):
            class_dir = os.path.dirname(inspect.getfile(self.__class__))
            package, package_search_path = self._package_search_path(self.__class__.__module__)

            loaders = []
            if os.path.isdir(os.path.join(class_dir, 'templates')):
                loaders.append(FileSystemLoader(os.path.join(class_dir, 'templates')))
            if package_is_installed(package):
                loaders.append(PackageLoader(package, package_search_path))
            if not loaders:
                raise EnvironmentError("no templates directory for %s" % self.__class__.__name__)

            self._template_env = Environment(loader=ChoiceLoader(loaders), trim_blocks=True, lstrip_blocks=True)
        return self._template_env

    def render(self, path: str, **kwargs) -> str:
        return self.render_template(self._environment().get_template(path), **kwargs)
