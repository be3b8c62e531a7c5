// nested object literal
var multiplechoiceInput = {
  // this must be same as id of <div class="multiplechoice" id="mc1" /> element in xhtml file
  mc1: {
    task1: {
      question: "De quelle couleur est cette fleur?",
      answers: "bleu;pourpre;jaune",
      correctAnswers: "2",
      multiSelect: "false",
      multiMedia: {
        type: "video",
        file: "butterfly"
      }
    }
  }
};
