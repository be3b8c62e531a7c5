/* exbook runtime placeholder.
 * Packaging stand-in for the widget runtime: it reads each page's data
 * document and marks the anchors it finds, nothing more. */
(function () {
  "use strict";
  var body = document.body;
  if (!body) {
    return;
  }
  var dataHref = body.getAttribute("data-exbook-data");
  if (!dataHref) {
    return;
  }
  var request = new XMLHttpRequest();
  request.open("GET", dataHref);
  request.onload = function () {
    var data;
    try {
      data = JSON.parse(request.responseText);
    } catch (e) {
      return;
    }
    var table = (data.uiStrings && data.uiStrings[data.language]) || {};
    (data.anchors || []).forEach(function (anchor) {
      var el = document.getElementById(anchor.exercise);
      if (!el) {
        return;
      }
      el.setAttribute("data-exbook-state", "placeholder");
      var note = el.querySelector(".exbook-fallback");
      if (note && table.unknownKind) {
        note.textContent = table.unknownKind;
      }
    });
  };
  request.send();
})();
